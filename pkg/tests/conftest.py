"""Shared strategies and deterministic bundle enumerations."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from veryample import Bundle, Divisor


def rank_partitions(n: int):
    """Partitions of n into unordered positive parts, descending."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in rank_partitions(n - first):
            if not rest or first >= rest[0]:
                yield (first,) + rest


def small_bundles(max_rank: int, max_abs_degree: int) -> list[Bundle]:
    """Every bundle with rank in [2, max_rank] and atom degrees in
    [-max_abs_degree, max_abs_degree], deduplicated, deterministic order."""
    seen = set()
    for r in range(2, max_rank + 1):
        for part in rank_partitions(r):
            degree_choices = range(-max_abs_degree, max_abs_degree + 1)
            for degs in itertools.product(degree_choices, repeat=len(part)):
                seen.add(Bundle(tuple(zip(part, degs))))
    return sorted(seen, key=lambda B: (B.rank, B.atoms))


@st.composite
def bundles(draw, min_rank: int = 2, max_rank: int = 6, max_abs_degree: int = 8):
    total = draw(st.integers(min_rank, max_rank))
    parts = []
    remaining = total
    while remaining > 0:
        part = draw(st.integers(1, remaining))
        parts.append(part)
        remaining -= part
    atoms = [
        (part, draw(st.integers(-max_abs_degree, max_abs_degree)))
        for part in parts
    ]
    return Bundle(atoms)


divisors = st.builds(
    Divisor, st.integers(min_value=0, max_value=6), st.integers(min_value=-8, max_value=8)
)
