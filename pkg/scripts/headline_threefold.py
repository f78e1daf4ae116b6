"""Walk one projectivized bundle end to end.

Default is the elliptic threefold P(E) for the semistable rank-3 bundle of
degree 4, polarized by 2T - f: prints the bundle invariants, the embedding
profile, the verdict with its full firing trail, and the vertical slice of
verdicts in b.

    python scripts/headline_threefold.py
    python scripts/headline_threefold.py --bundle 1:2,2:3 --a 2 --b -1
"""

from __future__ import annotations

import argparse

from veryample import (
    Divisor,
    classify_ample,
    classify_globally_generated,
    classify_normally_generated,
    classify_very_ample,
    embedding_profile,
    h0_divisor,
    parse_bundle,
)
from veryample.errors import DomainError, H0UndefinedError


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--bundle", default="3:4")
    parser.add_argument("--a", type=int, default=2)
    parser.add_argument("--b", type=int, default=-1)
    args = parser.parse_args()

    E = parse_bundle(args.bundle)
    D = Divisor(args.a, args.b)

    print(f"P(E) for E = {E}: rank {E.rank}, degree {E.degree}, "
          f"mu^-(E) = {E.mu_minus}, "
          f"{'semistable' if E.is_semistable else 'unstable'}")
    print(f"divisor D = {D}")

    try:
        degree, dim = embedding_profile(E, D.a, D.b)
        print(f"profile: degree {degree} image in P^{dim} "
              f"(h^0 = {h0_divisor(E, D.a, D.b)})")
    except (DomainError, H0UndefinedError) as exc:
        print(f"profile: unavailable ({exc})")

    print(f"ample: {'Yes' if classify_ample(E, D) else 'No'}")
    for label, fn in (("globally generated", classify_globally_generated),
                      ("normally generated", classify_normally_generated)):
        try:
            print(f"{label}: {fn(E, D).status}")
        except DomainError:
            print(f"{label}: n/a")

    v = classify_very_ample(E, D)
    print(f"very ample: {v.status}", end="")
    if v.binding_rule:
        print(f"  [{v.strength.value}: {v.binding_rule}]")
    elif v.is_unknown:
        print(f"  [open window {v.unknown_window.render()}]")
    else:
        print()

    print("\nfiring trail:")
    width = max(len(f.rule_id) for f in v.firings)
    for f in v.firings:
        print(f"  {f.rule_id:<{width}}  frame {f.frame:>2}  "
              f"{f.outcome.value:<12}  {f.condition}")

    print("\nvertical slice (same a, varying b):")
    for b in range(D.b - 3, D.b + 4):
        w = classify_very_ample(E, Divisor(D.a, b))
        marker = " <-" if b == D.b else ""
        print(f"  b = {b:>3}: s = {str(w.slope_invariant):>5}  "
              f"{w.status}{marker}")


if __name__ == "__main__":
    main()
