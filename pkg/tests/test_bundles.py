"""Atom grammar, slope invariants, filtration, twist and dual."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from veryample import Bundle, BundleParseError, IndecBundle, parse_bundle

from conftest import bundles, small_bundles


def sub_multiset_slopes(B: Bundle) -> list[Fraction]:
    """Slopes of every nonempty sub-multiset of atoms.  Brute oracle for
    mu^+ / mu^-: the extremes over all subsheaf/quotient shadows."""
    slopes = []
    for k in range(1, len(B.atoms) + 1):
        for combo in itertools.combinations(B.atoms, k):
            rank = sum(A.rank for A in combo)
            degree = sum(A.degree for A in combo)
            slopes.append(Fraction(degree, rank))
    return slopes


class TestGrammar:
    def test_parse_round_trip(self):
        B = parse_bundle("1:2,2:3")
        assert B.atoms == (IndecBundle(1, 2), IndecBundle(2, 3))
        assert str(B) == "1:2,2:3"

    def test_atom_order_is_canonical(self):
        assert parse_bundle("2:3,1:2") == parse_bundle("1:2,2:3")

    def test_whitespace_tolerated(self):
        assert parse_bundle(" 2:1 , 1:0 ") == parse_bundle("1:0,2:1")

    def test_negative_degree(self):
        assert parse_bundle("2:-3").atoms == (IndecBundle(2, -3),)

    @pytest.mark.parametrize(
        "text",
        ["", "  ", "0:1", "2:", ":3", "x", "1:2,,2:3", "1.5:2", "2:3;1:1", "-1:2"],
    )
    def test_rejects_malformed(self, text):
        with pytest.raises(BundleParseError):
            parse_bundle(text)

    def test_programmatic_rank_validation(self):
        with pytest.raises(ValueError):
            IndecBundle(0, 1)
        with pytest.raises(ValueError):
            Bundle(())


class TestSlopes:
    def test_indecomposable(self):
        E = parse_bundle("2:1")
        assert E.slope == Fraction(1, 2)
        assert E.mu_minus == E.mu_plus == Fraction(1, 2)
        assert E.is_semistable

    def test_two_stage(self):
        E = parse_bundle("1:2,2:3")
        assert E.rank == 3
        assert E.degree == 5
        assert E.slope == Fraction(5, 3)
        assert E.mu_minus == Fraction(3, 2)
        assert E.mu_plus == 2
        assert not E.is_semistable

    def test_semistable_decomposable(self):
        E = parse_bundle("1:1,2:2,3:3")
        assert E.is_semistable
        assert E.mu_minus == E.mu_plus == 1

    def test_extremes_against_brute_enumeration(self):
        for B in small_bundles(4, 3):
            slopes = sub_multiset_slopes(B)
            assert B.mu_plus == max(slopes)
            assert B.mu_minus == min(slopes)

    @settings(max_examples=150, derandomize=True)
    @given(bundles(max_rank=6, max_abs_degree=8))
    def test_extremes_against_brute_enumeration_sampled(self, B):
        slopes = sub_multiset_slopes(B)
        assert B.mu_plus == max(slopes)
        assert B.mu_minus == min(slopes)


class TestFiltration:
    def test_example(self):
        E = parse_bundle("1:2,2:3,1:1")
        stages = E.hn_filtration()
        assert [stage.slope for stage in stages] == [2, Fraction(3, 2), 1]
        assert stages[0].atoms == (IndecBundle(1, 2),)
        assert stages[1].rank == 2 and stages[1].degree == 3

    @settings(max_examples=150, derandomize=True)
    @given(bundles())
    def test_properties(self, B):
        stages = B.hn_filtration()
        slopes = [stage.slope for stage in stages]
        assert slopes == sorted(slopes, reverse=True)
        assert len(set(slopes)) == len(slopes)
        regrouped = tuple(sorted(A for stage in stages for A in stage.atoms))
        assert regrouped == B.atoms
        assert slopes[0] == B.mu_plus
        assert slopes[-1] == B.mu_minus
        for stage in stages:
            assert all(A.slope == stage.slope for A in stage.atoms)


class TestTwistAndDual:
    def test_twist_example(self):
        assert parse_bundle("2:1").twist(2) == parse_bundle("2:5")

    def test_normalize_examples(self):
        assert IndecBundle(3, 4).normalize() == (IndecBundle(3, 1), -1)
        assert IndecBundle(2, -3).normalize() == (IndecBundle(2, 1), 2)

    @settings(max_examples=150, derandomize=True)
    @given(bundles(), st.integers(-5, 5))
    def test_twist_shifts_slopes(self, B, l):
        twisted = B.twist(l)
        assert twisted.rank == B.rank
        assert twisted.degree == B.degree + B.rank * l
        assert twisted.slope == B.slope + l
        assert twisted.mu_minus == B.mu_minus + l
        assert twisted.mu_plus == B.mu_plus + l

    @given(st.integers(1, 8), st.integers(-20, 20))
    def test_normalize_lands_in_fundamental_range(self, r, d):
        reduced, l = IndecBundle(r, d).normalize()
        assert 0 <= reduced.degree < r
        assert reduced == IndecBundle(r, d).twist(l)
        again, l2 = reduced.normalize()
        assert again == reduced and l2 == 0

    @settings(max_examples=150, derandomize=True)
    @given(bundles())
    def test_dual_involution_and_slope_flip(self, B):
        assert B.dual().dual() == B
        assert B.dual().mu_minus == -B.mu_plus
        assert B.dual().mu_plus == -B.mu_minus


class TestAmpleness:
    def test_examples(self):
        assert parse_bundle("2:1").is_ample
        assert parse_bundle("1:1,2:3").is_ample
        assert not parse_bundle("1:0,1:3").is_ample
        assert not parse_bundle("3:-1").is_ample

    @settings(max_examples=150, derandomize=True)
    @given(bundles())
    def test_ample_iff_every_atom_positive(self, B):
        assert B.is_ample == all(A.degree > 0 for A in B.atoms)
        assert B.is_ample == (B.mu_minus > 0)
