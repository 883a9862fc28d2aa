import math

import numpy as np
import pytest

from gbcomet import CONSTANTS, NumericError, li, li_offset, quadrature
from gbcomet.errors import DomainError


def li_oracle(x: float) -> float:
    """Principal-value quadrature oracle for li(x), independent of the series.

    Substituting t = e^u turns li(x) into PV int_{-inf}^{ln x} e^u/u du.
    Splitting e^u/u = (e^u - 1)/u + 1/u leaves a smooth integrand (expm1
    keeps it exact near 0) plus an exactly-known principal value of 1/u;
    the tail below u = -60 is ~1e-28 and ignored.
    """
    ux = math.log(x)
    g = lambda u: math.expm1(u) / u if u != 0.0 else 1.0
    return quadrature(g, -60.0, ux, 1e-12) + math.log(ux) - math.log(60.0)


class TestLi:
    def test_li2_frozen_from_oracle(self):
        # oracle value: li_oracle(2.0) = 1.0451637801174927
        assert li(2.0) == pytest.approx(1.0451637801174927, rel=1e-10)

    def test_li10_frozen_from_oracle(self):
        # oracle value: li_oracle(10.0) = 6.165599504787297
        assert li(10.0) == pytest.approx(6.165599504787297, rel=1e-10)

    def test_near_singularity(self):
        v = li(1.0000001)
        assert math.isfinite(v)
        assert v == pytest.approx(-15.54087993547292, rel=1e-9)

    @pytest.mark.parametrize("x", [2.0, 10.0, 1e3, 1e6])
    def test_series_matches_quadrature(self, x):
        assert li(x) == pytest.approx(li_oracle(x), rel=1e-9)

    @pytest.mark.parametrize("x", [1.0, 0.5, -3.0])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            li(x)


class TestLiOffset:
    def test_zero_at_two(self):
        assert li_offset(2.0) == 0.0

    def test_value_at_ten(self):
        # li(10) - li(2) via the oracle
        assert li_offset(10.0) == pytest.approx(5.120435724669806, rel=1e-9)

    def test_value_at_thousand(self):
        assert li_offset(1000.0) == pytest.approx(176.5644942, rel=1e-8)

    def test_domain(self):
        with pytest.raises(DomainError):
            li_offset(1.5)

    def test_strictly_increasing(self):
        xs = np.geomspace(2.0, 1e6, 100)
        ys = [li_offset(float(x)) for x in xs]
        assert all(b > a for a, b in zip(ys, ys[1:]))


class TestQuadrature:
    def test_square(self):
        assert quadrature(lambda x: x * x, 0.0, 1.0, 1e-9) == pytest.approx(1 / 3, rel=1e-9)

    def test_reciprocal_log(self):
        v = quadrature(lambda t: 1.0 / math.log(t), 2.0, 10.0, 1e-9)
        assert v == pytest.approx(5.1204357, rel=1e-7)
        assert v == pytest.approx(li_offset(10.0), rel=1e-9)

    def test_empty_interval(self):
        assert quadrature(lambda x: x, 5.0, 5.0, 1e-9) == 0.0

    def test_cubics_exact(self):
        rng = np.random.default_rng(99)
        for _ in range(5):
            c = rng.uniform(-3, 3, size=4)
            f = lambda x: c[0] + c[1] * x + c[2] * x * x + c[3] * x**3
            exact = sum(c[k] / (k + 1) * (2.0 ** (k + 1) - (-1.0) ** (k + 1)) for k in range(4))
            assert quadrature(f, -1.0, 2.0, 1e-9) == pytest.approx(exact, rel=1e-12, abs=1e-12)

    def test_bad_tolerance(self):
        with pytest.raises(ValueError):
            quadrature(lambda x: x, 0.0, 1.0, 1e-2)

    def test_inverted_bounds(self):
        with pytest.raises(ValueError):
            quadrature(lambda x: x, 1.0, 0.0, 1e-9)

    def test_non_finite_reports_abscissa(self):
        def f(x):
            return math.inf if x > 0.5 else 1.0

        with pytest.raises(NumericError, match="x="):
            quadrature(f, 0.0, 1.0, 1e-9)


class TestConstants:
    def test_gamma_bounds(self):
        assert 0.5772156 < CONSTANTS.gamma < 0.5772157

    def test_e_gamma_bounds(self):
        assert 1.78107 < CONSTANTS.e_gamma < 1.78108

    def test_consistency(self):
        assert CONSTANTS.e_gamma == pytest.approx(math.exp(CONSTANTS.gamma), rel=1e-12)
        assert CONSTANTS.li2 == pytest.approx(li(2.0), rel=1e-15)
