"""Result types for the classification engine.

A classification never returns a bare boolean: it returns a Verdict carrying
the three-valued status, the strength of the justification, the binding rule,
and the full list of RuleFiring records (one per rule per frame, including
rules that did not apply).  Unknown verdicts carry the exact open interval of
the slope invariant b + a*mu^-(E) in which the question is unsettled.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

__all__ = [
    "Status",
    "Strength",
    "Outcome",
    "Comparison",
    "RuleFiring",
    "Window",
    "Verdict",
    "frac_text",
    "frac_json",
]


def frac_text(q: Fraction) -> str:
    """Exact decimal-free rendering: integers plain, otherwise p/q."""
    return str(q)


def frac_json(q: Optional[Fraction]):
    if q is None:
        return None
    return {"num": q.numerator, "den": q.denominator}


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class Strength(str, enum.Enum):
    IFF = "iff"
    SUFFICIENT = "sufficient"
    NECESSARY = "necessary"


class Outcome(str, enum.Enum):
    """What one rule said about one divisor in one frame.

    yes / no force the verdict; pass records a necessary condition that
    held; insufficient records a sufficient condition that evaluated false
    (no conclusion); inapplicable records a guard that did not match.
    """

    YES = "yes"
    NO = "no"
    PASS = "pass"
    INSUFFICIENT = "insufficient"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Comparison:
    """One exact inequality, evaluated: lhs op rhs with op in {>, >=}."""

    label: str
    lhs: Fraction
    op: str
    rhs: Fraction

    def __post_init__(self) -> None:
        if self.op not in (">", ">="):
            raise ValueError(f"comparison operator must be > or >=, got {self.op!r}")

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs if self.op == ">" else self.lhs >= self.rhs

    def render(self) -> str:
        verdict = "holds" if self.holds else "fails"
        return (
            f"{self.label} = {frac_text(self.lhs)}, needs {self.op} "
            f"{frac_text(self.rhs)}: {verdict}"
        )


@dataclass(frozen=True)
class RuleFiring:
    """One rule evaluated against one divisor in one frame."""

    rule_id: str
    citation: str
    strength: Optional[Strength]
    condition: str
    lhs: Optional[Fraction]
    threshold: Optional[Fraction]
    strict: Optional[bool]
    outcome: Outcome
    frame: int

    def to_json_dict(self) -> dict:
        return {
            "rule_id": self.rule_id,
            "citation": self.citation,
            "strength": self.strength.value if self.strength else None,
            "condition": self.condition,
            "lhs": frac_json(self.lhs),
            "threshold": frac_json(self.threshold),
            "strict": self.strict,
            "outcome": self.outcome.value,
            "frame": self.frame,
        }


@dataclass(frozen=True)
class Window:
    """An interval for the slope invariant b + a*mu^-(E); None means
    unbounded on that side."""

    lo: Optional[Fraction]
    lo_strict: bool
    hi: Optional[Fraction]
    hi_inclusive: bool

    def render(self) -> str:
        left = "(" if (self.lo_strict or self.lo is None) else "["
        right = "]" if (self.hi_inclusive and self.hi is not None) else ")"
        lo = "-inf" if self.lo is None else frac_text(self.lo)
        hi = "inf" if self.hi is None else frac_text(self.hi)
        return f"{left}{lo}, {hi}{right}"

    def to_json_dict(self) -> dict:
        return {
            "lo": frac_json(self.lo),
            "lo_strict": self.lo_strict,
            "hi": frac_json(self.hi),
            "hi_inclusive": self.hi_inclusive,
            "text": self.render(),
        }


_STATUS_WORDS = {
    "very_ample": {Status.YES: "VeryAmple", Status.NO: "NotVeryAmple", Status.UNKNOWN: "Unknown"},
    "globally_generated": {Status.YES: "Yes", Status.NO: "No", Status.UNKNOWN: "Unknown"},
    "normally_generated": {Status.YES: "Yes", Status.NO: "No", Status.UNKNOWN: "Unknown"},
}


@dataclass(frozen=True)
class Verdict:
    """A classification with its full justification trail."""

    property_name: str
    outcome: Status
    strength: Optional[Strength]
    binding_rule: Optional[str]
    firings: tuple[RuleFiring, ...]
    unknown_window: Optional[Window] = None
    unknown_reason: Optional[str] = None
    slope_invariant: Optional[Fraction] = field(default=None)

    @property
    def status(self) -> str:
        """Property-flavoured status word (VeryAmple / NotVeryAmple /
        Unknown for very ampleness; Yes / No / Unknown otherwise)."""
        return _STATUS_WORDS[self.property_name][self.outcome]

    @property
    def is_yes(self) -> bool:
        return self.outcome is Status.YES

    @property
    def is_no(self) -> bool:
        return self.outcome is Status.NO

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Status.UNKNOWN

    def to_json_dict(self) -> dict:
        return {
            "property": self.property_name,
            "status": self.status,
            "strength": self.strength.value if self.strength else None,
            "binding_rule": self.binding_rule,
            "slope_invariant": frac_json(self.slope_invariant),
            "unknown_window": self.unknown_window.to_json_dict() if self.unknown_window else None,
            "unknown_reason": self.unknown_reason,
            "firings": [f.to_json_dict() for f in self.firings],
        }
