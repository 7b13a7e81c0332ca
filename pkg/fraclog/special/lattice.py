"""Epstein zeta function of the integer lattice Z^d.

Z_d(t) = sum over k in Z^d, k != 0 of |k|^{-t}, continued to every real t != d by
splitting the theta-function integral at u = 1 (the Ewald split):

    pi^{-t/2} Gamma(t/2) Z_d(t) = 2/(t - d) - 2/t
        + sum_k [ (pi|k|^2)^{-t/2} Gamma(t/2, pi|k|^2)
                + (pi|k|^2)^{-(d-t)/2} Gamma((d-t)/2, pi|k|^2) ]

Both lattice sums converge like e^{-pi |k|^2}.
"""

import math
from functools import lru_cache
from numbers import Integral

import numpy as np
from scipy import special

from fraclog.errors import DomainError

# e^{-pi m} at the last shell is ~1e-49, far below double precision.
MAX_SHELL = 36


@lru_cache(maxsize=8)
def _shell_counts(d: int) -> tuple[tuple[int, int], ...]:
    """(m, #{k in Z^d : |k|^2 = m}) for 1 <= m <= MAX_SHELL."""
    reach = math.isqrt(MAX_SHELL)
    axis = np.arange(-reach, reach + 1)
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    norms = np.asarray(sum(k * k for k in mesh)).ravel()
    shells, counts = np.unique(norms[(norms > 0) & (norms <= MAX_SHELL)], return_counts=True)
    return tuple(zip(shells.tolist(), counts.tolist(), strict=True))


def upper_gamma(a: float, b: float) -> float:
    """Unnormalised upper incomplete gamma Gamma(a, b) for any real a and b > 0."""
    if a > 0:
        return float(special.gamma(a) * special.gammaincc(a, b))
    if a == 0:
        return float(special.exp1(b))
    # Gamma(a + 1, b) = a Gamma(a, b) + b^a e^{-b}
    return (upper_gamma(a + 1.0, b) - b**a * math.exp(-b)) / a


@lru_cache(maxsize=64)
def lattice_zeta(d: int, t: float) -> float:
    """Z_d(t), the analytically continued Epstein zeta function of Z^d.

    Z_1(t) = 2 zeta(t); Z_d(0) = -1; Z_d vanishes at negative even integers.

    Raises:
        DomainError: If d < 1 or t = d (the pole)
    """
    if isinstance(d, bool) or not isinstance(d, Integral) or d < 1:
        raise DomainError("lattice dimension must be a positive integer", d=d)
    t = float(t)
    if t == d:
        raise DomainError("lattice zeta has a pole at t = d", d=d, t=t)
    if t == 0.0:
        return -1.0
    half = 0.5 * t
    if half < 0 and half.is_integer():
        return 0.0

    total = 2.0 / (t - d) - 2.0 / t
    for m, count in _shell_counts(d):
        b = math.pi * m
        total += count * (
            b ** (-half) * upper_gamma(half, b) + b ** (-(d - t) / 2) * upper_gamma((d - t) / 2, b)
        )
    return float(math.pi**half * special.rgamma(half) * total)
