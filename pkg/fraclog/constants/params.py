"""Validated parameter sets for the two log-Sobolev theorems."""

import math
from dataclasses import dataclass
from numbers import Integral, Real

from fraclog.errors import DomainError

# Relative slack used to recognise q at the Sobolev endpoint p(n-1)/(n-p).
_ENDPOINT_RTOL = 8.0 * 2.0**-52


def check_dimension(n: object, minimum: int = 1) -> int:
    """Validate an integer dimension.

    Raises:
        DomainError: If n is not an integer >= minimum
    """
    if isinstance(n, bool) or not isinstance(n, Integral) or n < minimum:
        raise DomainError(f"dimension n must be an integer >= {minimum}", n=n)
    return int(n)


def check_positive(value: object, name: str) -> float:
    """Validate a positive finite real.

    Raises:
        DomainError: If value is not a finite real > 0
    """
    if isinstance(value, bool) or not isinstance(value, Real):
        raise DomainError(f"{name} must be a real number", **{name: value})
    result = float(value)
    if not math.isfinite(result) or result <= 0.0:
        raise DomainError(f"{name} must be positive and finite", **{name: value})
    return result


def check_order(n: int, s: object) -> float:
    """Validate the fractional order against 0 < s < n/2.

    Raises:
        DomainError: If s lies outside (0, n/2)
    """
    if isinstance(s, bool) or not isinstance(s, Real) or not math.isfinite(float(s)):
        raise DomainError("order s must be a finite real", s=s)
    order = float(s)
    if order <= 0.0:
        raise DomainError("order must satisfy s > 0", n=n, s=s)
    if order >= 0.5 * n:
        raise DomainError("order must satisfy s < n/2", n=n, s=s)
    return order


@dataclass(frozen=True)
class LsiParams:
    """Dimension, order and scale of the fractional log-Sobolev inequality."""

    n: int
    s: float
    a: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", check_dimension(self.n))
        object.__setattr__(self, "s", check_order(self.n, self.s))
        object.__setattr__(self, "a", check_positive(self.a, "a"))

    @property
    def sobolev_exponent(self) -> float:
        """The critical exponent 2n/(n - 2s)."""
        return 2.0 * self.n / (self.n - 2.0 * self.s)

    @property
    def interpolation_eps(self) -> float:
        """The eps with 2 eps + 2 = 2n/(n - 2s)."""
        return 2.0 * self.s / (self.n - 2.0 * self.s)


@dataclass(frozen=True)
class GnsParams:
    """Exponents of the Gagliardo-Nirenberg-Sobolev inequality.

    Build instances with :meth:`derive`; the constructor only re-checks invariants.
    """

    n: int
    p: float
    q: float
    r: float
    theta: float
    delta: float

    def __post_init__(self) -> None:
        if not 0.0 < self.theta <= 1.0:
            raise DomainError("theta must lie in (0, 1]", theta=self.theta)
        if self.delta <= 0.0:
            raise DomainError("delta = np - q(n - p) must be positive", delta=self.delta)

    @classmethod
    def derive(cls, n: object, p: object, q: object) -> "GnsParams":
        """Validate (n, p, q) and fill in r, theta and delta.

        Raises:
            DomainError: Naming the violated hypothesis (p-range, q-range or delta)
        """
        dim = check_dimension(n, minimum=2)
        p_val = check_positive(p, "p")
        q_val = check_positive(q, "q")
        if not 1.0 < p_val < dim:
            raise DomainError("p-range violated: need 1 < p < n", n=dim, p=p_val)
        q_max = p_val * (dim - 1) / (dim - p_val)
        if q_val <= p_val:
            raise DomainError("q-range violated: need q > p", p=p_val, q=q_val)
        at_endpoint = math.isclose(q_val, q_max, rel_tol=_ENDPOINT_RTOL, abs_tol=0.0)
        if q_val > q_max and not at_endpoint:
            raise DomainError(
                "q-range violated: need q <= p(n-1)/(n-p)", n=dim, p=p_val, q=q_val, q_max=q_max
            )
        if at_endpoint:
            q_val = q_max
        delta = dim * p_val - q_val * (dim - p_val)
        if delta <= 0.0:
            raise DomainError("delta = np - q(n-p) must be positive", n=dim, p=p_val, q=q_val)
        r = p_val * (q_val - 1.0) / (p_val - 1.0)
        if at_endpoint:
            theta = 1.0
        else:
            theta = (q_val - p_val) * dim / ((q_val - 1.0) * delta)
        return cls(n=dim, p=p_val, q=q_val, r=r, theta=theta, delta=delta)

    @property
    def q_max(self) -> float:
        """Upper end p(n-1)/(n-p) of the admissible q-range."""
        return self.p * (self.n - 1) / (self.n - self.p)

    @property
    def entropy_factor(self) -> float:
        """p(q-1)/(q-p), the factor multiplying both sides of the Lq log-Sobolev bound."""
        return self.p * (self.q - 1.0) / (self.q - self.p)

    @property
    def interpolation_eps(self) -> float:
        """The eps with q eps + q = r."""
        return (self.q - self.p) / (self.q * (self.p - 1.0))
