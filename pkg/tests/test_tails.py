"""Closed-form tail sums against the brute-force truncation oracle."""

import math

import numpy as np
import pytest

from harmsect.tails import (
    TailClass,
    tail_brute,
    tail_cube,
    tail_general_pair_diag,
    tail_linear,
    tail_square,
    tail_weighted,
    weight,
)

ALL_CLASSES = list(TailClass)
R_GRID = [0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99]


def brute_elementary(power, n, r, terms=20_000):
    """Oracle: direct truncated sum of k^power r^(k-1)."""
    ks = np.arange(n + 1, n + terms + 1, dtype=float)
    return math.fsum(ks**power * r ** (ks - 1.0))


class TestElementaryTails:
    def test_linear_geometric_derivative(self):
        # n = 0 tail is the derivative of the geometric series, 1/(1-r)^2
        assert tail_linear(0, 0.5) == pytest.approx(4.0, abs=1e-14)

    def test_linear_vanishes_at_zero(self):
        assert tail_linear(1, 0.0) == 0.0

    def test_linear_n2(self):
        # frozen from the truncation oracle
        assert brute_elementary(1, 2, 0.5) == pytest.approx(2.0, rel=1e-13)
        assert tail_linear(2, 0.5) == pytest.approx(2.0, abs=1e-14)

    def test_square_at_zero(self):
        assert tail_square(0, 0.0) == 1.0
        assert tail_square(3, 0.0) == 0.0

    def test_square_half(self):
        # (1+r)/(1-r)^3 at r = 1/2
        assert brute_elementary(2, 0, 0.5) == pytest.approx(12.0, rel=1e-13)
        assert tail_square(0, 0.5) == pytest.approx(12.0, abs=1e-12)

    def test_cube_values(self):
        # (1+4r+r^2)/(1-r)^4 at r = 1/2
        assert brute_elementary(3, 0, 0.5) == pytest.approx(52.0, rel=1e-13)
        assert tail_cube(0, 0.5) == pytest.approx(52.0, abs=1e-12)
        assert tail_cube(0, 0.0) == 1.0
        assert tail_cube(5, 0.0) == 0.0

    @pytest.mark.parametrize("power,fn", [(1, tail_linear), (2, tail_square), (3, tail_cube)])
    @pytest.mark.parametrize("n", [0, 1, 2, 5, 17])
    @pytest.mark.parametrize("r", [0.1, 0.5, 0.9])
    def test_against_oracle(self, power, fn, n, r):
        expected = brute_elementary(power, n, r)
        assert fn(n, r) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("fn", [tail_linear, tail_square, tail_cube])
    def test_domain_errors(self, fn):
        with pytest.raises(ValueError):
            fn(2, -0.1)
        with pytest.raises(ValueError):
            fn(2, 1.0)
        with pytest.raises(ValueError):
            fn(-1, 0.5)


class TestWeights:
    @pytest.mark.parametrize("cls", ALL_CLASSES)
    def test_nonnegative_integers(self, cls):
        ks = np.arange(1, 60, dtype=float)
        w = weight(cls, ks)
        assert np.all(w >= 0)
        assert np.allclose(w, np.round(w))

    def test_co_analytic_vanish_at_one(self):
        assert weight(TailClass.GENERAL_CO_ANALYTIC, 1.0) == 0.0
        assert weight(TailClass.CONVEX_CO_ANALYTIC, 1.0) == 0.0

    def test_first_values(self):
        assert weight(TailClass.GENERAL_ANALYTIC, 2.0) == 5.0
        assert weight(TailClass.GENERAL_CO_ANALYTIC, 2.0) == 1.0
        assert weight(TailClass.CONVEX_ANALYTIC, 2.0) == 3.0
        assert weight(TailClass.CONVEX_CO_ANALYTIC, 2.0) == 1.0


class TestWeightedTails:
    def test_zero_radius(self):
        for cls in ALL_CLASSES:
            assert tail_weighted(cls, 1, 0.0) == 0.0
            assert tail_weighted(cls, 7, 0.0) == 0.0

    def test_general_analytic_example(self):
        # sum_{k >= 2} k(k+1)(2k+1)/6 * 0.1^(k-1), oracle truncated at 500 terms
        expected = tail_brute(TailClass.GENERAL_ANALYTIC, 1, 0.1, 500)
        assert tail_weighted(TailClass.GENERAL_ANALYTIC, 1, 0.1) == pytest.approx(
            expected, rel=1e-12
        )

    @pytest.mark.parametrize("cls", ALL_CLASSES)
    @pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 25, 50])
    @pytest.mark.parametrize("r", R_GRID)
    def test_against_truncation_oracle(self, cls, n, r):
        closed = tail_weighted(cls, n, r)
        brute = tail_brute(cls, n, r, 20_000)
        assert abs(closed - brute) / (1.0 + closed) < 1e-12

    def test_increasing_in_r(self):
        rs = np.linspace(0.05, 0.95, 19)
        for cls in ALL_CLASSES:
            vals = tail_weighted(cls, 3, rs)
            assert np.all(np.diff(vals) > 0)

    def test_decreasing_in_n(self):
        for cls in ALL_CLASSES:
            vals = [tail_weighted(cls, n, 0.6) for n in range(1, 30)]
            assert all(a > b for a, b in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            tail_weighted(TailClass.GENERAL_ANALYTIC, 0, 0.5)
        with pytest.raises(ValueError):
            tail_weighted(TailClass.GENERAL_ANALYTIC, 2, 1.0)
        with pytest.raises(ValueError):
            tail_weighted(TailClass.GENERAL_ANALYTIC, 2, -0.2)


class TestCombinedDiagonal:
    @pytest.mark.parametrize("n", range(2, 51))
    def test_matches_pair_sum(self, n):
        rs = np.asarray(R_GRID)
        pair = tail_weighted(TailClass.GENERAL_ANALYTIC, n, rs) + tail_weighted(
            TailClass.GENERAL_CO_ANALYTIC, n, rs
        )
        combined = tail_general_pair_diag(n, rs)
        assert np.all(np.abs(pair - combined) / (1.0 + np.abs(combined)) < 1e-13)


class TestBruteForce:
    def test_single_term(self):
        # first term k = 2 of the convex analytic tail at r = 1/2: weight 3
        assert tail_brute(TailClass.CONVEX_ANALYTIC, 1, 0.5, 1) == pytest.approx(1.5, abs=1e-15)

    def test_zero_radius(self):
        assert tail_brute(TailClass.GENERAL_ANALYTIC, 1, 0.0, 10) == 0.0

    def test_monotone_in_terms(self):
        values = [tail_brute(TailClass.GENERAL_ANALYTIC, 2, 0.7, t) for t in range(1, 200)]
        assert all(b >= a for a, b in zip(values, values[1:]))

    def test_large_term_count_matches_closed_form(self):
        for cls in ALL_CLASSES:
            closed = tail_weighted(cls, 3, 0.9)
            brute = tail_brute(cls, 3, 0.9, 10**6)
            assert abs(closed - brute) / (1.0 + closed) < 1e-10

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            tail_brute(TailClass.GENERAL_ANALYTIC, 2, 0.5, 0)
        with pytest.raises(ValueError):
            tail_brute(TailClass.GENERAL_ANALYTIC, 2, 1.5, 10)
