import csv
import io
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GRID
from turan_forge.bounds import (
    CSV_COLUMNS,
    asymptotic_constants,
    bounds_report,
    lower_bound_formula,
    sandwich_report,
    upper_bound,
    upper_bound_floor,
    write_csv,
)
from turan_forge.errors import InvalidParameterError


class TestUpperBound:
    @pytest.mark.parametrize("t", [2, 3, 4, 10])
    def test_n1(self, t):
        assert upper_bound(1, t) == 3.0
        assert upper_bound_floor(1, t) == 3

    @pytest.mark.parametrize(
        "n,t,expected,floor",
        [(10, 2, 15 * (1 + math.sqrt(19)), 80), (7, 4, 10.5 * (1 + math.sqrt(37)), 74), (3, 2, 4.5 * (1 + math.sqrt(5)), 14)],
    )
    def test_examples(self, n, t, expected, floor):
        assert upper_bound(n, t) == pytest.approx(expected, rel=1e-15)
        assert upper_bound_floor(n, t) == floor

    def test_reported_decimals(self):
        assert upper_bound(10, 2) == pytest.approx(80.384, abs=1e-3)
        assert upper_bound(7, 4) == pytest.approx(74.37, abs=1e-2)

    @given(st.integers(1, 10**6), st.integers(2, 200))
    def test_floor_exact(self, n, t):
        # exact check with integers: f <= U < f + 1 iff (2f - 3n)^2 <= 9 n^2 D < (2f + 2 - 3n)^2
        f = upper_bound_floor(n, t)
        disc = 9 * n * n * (2 * (t - 1) * (n - 1) + 1)
        assert 2 * f - 3 * n >= 0
        assert (2 * f - 3 * n) ** 2 <= disc < (2 * f + 2 - 3 * n) ** 2

    def test_invalid(self):
        with pytest.raises(InvalidParameterError):
            upper_bound(0, 2)
        with pytest.raises(InvalidParameterError):
            upper_bound(3, 1)


class TestLowerBound:
    @pytest.mark.parametrize("p,t,expected", [(3, 2, 9), (7, 4, 63), (11, 6, 165)])
    def test_examples(self, p, t, expected):
        assert lower_bound_formula(p, t) == expected

    @pytest.mark.parametrize("p,t", [(11, 4), (7, 3), (5, 0)])
    def test_invalid(self, p, t):
        with pytest.raises(InvalidParameterError):
            lower_bound_formula(p, t)

    @pytest.mark.parametrize("t,p", GRID)
    def test_formula_equals_construction(self, graph_cache, t, p):
        assert lower_bound_formula(p, t) == graph_cache(t, p).num_edges


class TestConstants:
    def test_t2(self):
        tri, chi3 = asymptotic_constants(2)
        assert tri == pytest.approx(2.1213203435596424, rel=1e-15)
        assert chi3 == pytest.approx(1 / math.sqrt(6), rel=1e-15)

    def test_t4(self):
        tri, chi3 = asymptotic_constants(4)
        assert tri == pytest.approx(3.6742346141747673, rel=1e-15)
        assert chi3 == pytest.approx(math.sqrt(0.5), rel=1e-15)

    @given(st.integers(2, 10**6))
    def test_ratio_identity(self, t):
        tri, chi3 = asymptotic_constants(t)
        assert tri / chi3 == pytest.approx(3**1.5, rel=1e-14)


class TestSandwich:
    def test_t2_p5(self):
        r = sandwich_report(2, 5)
        assert (r.lower, r.n) == (60, 10)
        assert r.normalized_lower == pytest.approx(60 / 10**1.5, rel=1e-15)
        assert round(r.normalized_lower, 5) == 1.89737
        assert r.normalized_lower == pytest.approx(r.predicted_normalized_lower, rel=1e-12)

    def test_t2_p61(self):
        r = sandwich_report(2, 61)
        assert (r.lower, r.n) == (164_700, 1830)
        assert r.upper == pytest.approx(168_790, rel=1e-4)
        assert round(r.sandwich_ratio, 4) == 1.0248

    def test_t4_p7(self):
        r = sandwich_report(4, 7)
        assert r.lower == 63 <= r.upper_floor == 74

    @pytest.mark.parametrize("t,p", GRID)
    def test_invariants(self, t, p):
        r = sandwich_report(t, p)
        assert r.lower <= r.upper_floor
        assert r.normalized_lower <= r.asymptotic_constant
        assert abs(r.normalized_lower - r.predicted_normalized_lower) / r.predicted_normalized_lower < 1e-12

    def test_ratio_decreasing(self):
        for t in {t for t, _ in GRID}:
            ratios = [sandwich_report(t, p).sandwich_ratio for tt, p in GRID if tt == t]
            assert all(a > b for a, b in zip(ratios, ratios[1:]))

    def test_bare_report(self):
        r = bounds_report(10, 2)
        assert r.lower is None and r.upper_floor == 80

    def test_csv(self):
        text = write_csv([sandwich_report(2, 5), sandwich_report(4, 7)])
        rows = list(csv.DictReader(io.StringIO(text)))
        assert tuple(rows[0].keys()) == CSV_COLUMNS
        assert rows[1]["lower"] == "63"
        assert float(rows[0]["sandwich_ratio"]) == sandwich_report(2, 5).sandwich_ratio
