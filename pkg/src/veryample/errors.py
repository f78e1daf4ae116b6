"""Error types shared across the package.

DomainError marks inputs outside a documented precondition; the CLI maps it
to exit code 3.  Grammar violations raise BundleParseError (see bundles.py)
and map to exit code 2.  ContradictionError is different in kind: it means
the rule table itself produced an affirmative and a negative answer for the
same divisor, which falsifies the transcription, so it is never caught.
"""

from __future__ import annotations

__all__ = [
    "DomainError",
    "H0UndefinedError",
    "ContextMismatchError",
    "ContradictionError",
]


class DomainError(ValueError):
    """Input violates a documented precondition (not a syntax problem)."""


class H0UndefinedError(DomainError):
    """h^0 was requested where the positivity precondition fails, so the
    degree formula does not compute it."""


class ContextMismatchError(DomainError):
    """Arithmetic mixed numerical classes living on different P(E)."""


class ContradictionError(RuntimeError):
    """The rule table concluded both Yes and No for one divisor; the tables
    are transcribed wrong and no verdict can be trusted."""
