"""Tests for log-gamma and related special functions."""

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fraclog.errors import DomainError
from fraclog.special import (
    gamma_ratio_log,
    gamma_shift_ratio_log,
    lattice_zeta,
    log_gamma,
    sphere_surface_log,
    stirling_log_gamma,
    upper_gamma,
)

mpmath.mp.dps = 40

positive = st.floats(min_value=1e-3, max_value=1e6, allow_nan=False, allow_infinity=False)


def mp_log_gamma(x: float) -> float:
    return float(mpmath.loggamma(mpmath.mpf(x)))


class TestLogGamma:
    """log_gamma against known values and a high-precision oracle."""

    def test_known_values(self):
        """lnGamma(1) = lnGamma(2) = 0 and Gamma(1/2) = sqrt(pi)."""
        assert abs(log_gamma(1.0)) <= 1e-15
        assert abs(log_gamma(2.0)) <= 1e-15
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)
        assert log_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-14)

    @given(positive)
    @settings(max_examples=200, deadline=None)
    def test_matches_mpmath(self, x):
        """Relative error below 1e-12, or absolute 1e-14 near the zeros at 1 and 2."""
        expected = mp_log_gamma(x)
        got = log_gamma(x)
        assert abs(got - expected) <= max(1e-12 * abs(expected), 1e-14)

    @given(st.floats(min_value=1e-2, max_value=1e5))
    @settings(max_examples=200, deadline=None)
    def test_recurrence(self, x):
        """lnGamma(x + 1) = lnGamma(x) + ln x up to a few ulps of the larger side."""
        left = log_gamma(x + 1.0)
        right = log_gamma(x) + math.log(x)
        # Relative 1e-11 where lnGamma is large; two ulps of lnGamma(x+1) near its zeros.
        tolerance = max(1e-11 * abs(left), 2.0 * float(np.spacing(abs(left))), 1e-14)
        assert abs(left - right) <= tolerance

    def test_vectorised(self):
        """Arrays evaluate elementwise and keep their shape."""
        x = np.array([[0.5, 1.0], [3.0, 7.5]])
        result = log_gamma(x)
        assert result.shape == (2, 2)
        assert result[1, 0] == pytest.approx(math.log(2.0), rel=1e-14)

    @pytest.mark.parametrize("k", range(21))
    def test_half_integers(self, k):
        """lnGamma(k + 1/2) = ln[(2k)! sqrt(pi) / (4^k k!)]."""
        expected = (
            math.log(math.factorial(2 * k))
            + 0.5 * math.log(math.pi)
            - k * math.log(4.0)
            - math.log(math.factorial(k))
        )
        assert abs(log_gamma(k + 0.5) - expected) <= 1e-10 * max(abs(expected), 1.0)

    @pytest.mark.parametrize("bad", [0.0, -1.0, -0.5, math.inf, math.nan])
    def test_domain_error(self, bad):
        """Non-positive and non-finite arguments are rejected."""
        with pytest.raises(DomainError):
            log_gamma(bad)


class TestGammaRatio:
    """Ratios in log space, where the individual values overflow."""

    @pytest.mark.parametrize(
        "num,den",
        [(0.5, 2.5), (1e6 - 1.0, 1e6 + 1.0), (5e8 - 0.5, 5e8 + 0.5), (3.0, 1.5), (1e3, 5e2)],
    )
    def test_matches_mpmath(self, num, den):
        """Agreement with mpmath to 1e-11 relative (absolute for tiny results)."""
        expected = float(mpmath.loggamma(num) - mpmath.loggamma(den))
        got = gamma_ratio_log(num, den)
        assert abs(got - expected) <= 1e-11 * max(abs(expected), 1.0)

    def test_close_arguments_keep_precision(self):
        """Gamma(x+1)/Gamma(x) = x exactly even for x = 1e12."""
        x = 1e12
        assert gamma_ratio_log(x + 1.0, x) == pytest.approx(math.log(x), rel=1e-12)

    def test_shift_ratio_approaches_power(self):
        """ln Gamma(x+a)/Gamma(x) - a ln x tends to zero like a(a-1)/(2x)."""
        gaps = [abs(gamma_shift_ratio_log(x, 2.0) - 2.0 * math.log(x)) for x in (1e2, 1e4, 1e6)]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] == pytest.approx(1.0 / 1e6, rel=1e-3)


class TestStirlingAndSphere:
    """Stirling approximant and unit-sphere surface areas."""

    def test_stirling_relative_gap(self):
        """lnGamma(x) - Stirling(x) is about 1/(12x)."""
        for x in (10.0, 100.0, 1000.0):
            gap = log_gamma(x) - stirling_log_gamma(x)
            assert gap == pytest.approx(1.0 / (12.0 * x), rel=1e-2)

    def test_stirling_relative_error_decreases(self):
        errors = [
            abs(log_gamma(x) - stirling_log_gamma(x)) / abs(log_gamma(x))
            for x in (10.0, 1e2, 1e3, 1e4)
        ]
        assert all(later < earlier for earlier, later in zip(errors, errors[1:]))

    @pytest.mark.parametrize(
        "n,expected",
        [(1, 2.0), (2, 2.0 * math.pi), (3, 4.0 * math.pi), (4, 2.0 * math.pi**2)],
    )
    def test_low_dimensions(self, n, expected):
        """omega_0 = 2, omega_1 = 2 pi, omega_2 = 4 pi, omega_3 = 2 pi^2."""
        assert sphere_surface_log(n) == pytest.approx(math.log(expected), rel=1e-14)

    def test_huge_dimension_finite(self):
        """The surface area underflows in linear space but its log stays finite."""
        value = sphere_surface_log(10**6)
        assert math.isfinite(value)
        assert value < -1e6

    def test_rejects_non_integer(self):
        with pytest.raises(DomainError):
            sphere_surface_log(2.5)  # type: ignore[arg-type]


class TestLatticeZeta:
    """Epstein zeta of Z^d against Riemann and Dirichlet-beta closed forms."""

    @pytest.mark.parametrize("t", [-3.0, -2.2, -1.0, -0.5, 0.5, 2.0, 3.5])
    def test_one_dimension(self, t):
        """Z_1(t) = 2 zeta(t)."""
        expected = 2.0 * float(mpmath.zeta(t))
        assert lattice_zeta(1, t) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("t", [-3.0, -1.0, -0.4, 1.0, 3.0])
    def test_two_dimensions(self, t):
        """Z_2(t) = 4 zeta(t/2) beta(t/2)."""
        half = mpmath.mpf(t) / 2
        expected = 4.0 * float(mpmath.zeta(half) * mpmath.dirichlet(half, [0, 1, 0, -1]))
        assert lattice_zeta(2, t) == pytest.approx(expected, rel=1e-10)

    def test_three_dimensions_direct_sum(self):
        """Where the lattice sum converges it agrees with direct summation."""
        axis = np.arange(-20, 21)
        mesh = np.meshgrid(axis, axis, axis, indexing="ij")
        norms = (mesh[0] ** 2 + mesh[1] ** 2 + mesh[2] ** 2).ravel()
        direct = float(np.sum(norms[norms > 0].astype(float) ** -4.0))
        assert lattice_zeta(3, 8.0) == pytest.approx(direct, rel=1e-6)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_special_values(self, d):
        """Z_d(0) = -1 and the trivial zeros at negative even integers."""
        assert lattice_zeta(d, 0.0) == -1.0
        assert lattice_zeta(d, -2.0) == 0.0
        assert lattice_zeta(d, -4.0) == 0.0

    def test_pole(self):
        with pytest.raises(DomainError, match="pole"):
            lattice_zeta(2, 2.0)

    @pytest.mark.parametrize("a", [-2.5, -1.0, 0.0, 0.5, 3.0])
    def test_upper_gamma(self, a):
        """Gamma(a, b) for negative, zero and positive a."""
        expected = float(mpmath.gammainc(a, math.pi))
        assert upper_gamma(a, math.pi) == pytest.approx(expected, rel=1e-11)
