"""Radial functions in abstract dimension n with double-exponential quadrature.

Nodes come from the substitution r = exp((pi/2) sinh t) on a uniform t-grid, which
maps (0, inf) onto the real line and makes both the r^{n-1} growth near the origin
and algebraic tails decay double exponentially in t. The Jacobian and the r^{n-1}
factor are kept as log weights so dimensions in the thousands do not overflow.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.special import logsumexp

from fraclog.constants.params import check_dimension
from fraclog.errors import DomainError
from fraclog.special.gamma import sphere_surface_log

DEFAULT_NODE_COUNT = 512
MIN_NODE_COUNT = 32
# t-range of the substitution; r spans about [5e-12, 2e11].
DEFAULT_T_MAX = 3.5

RadialFunction = Callable[[NDArray[np.float64]], NDArray[np.float64]]


@dataclass(frozen=True)
class RadialProfile:
    """f(|x|) on R^n, sampled at quadrature nodes.

    Attributes:
        ambient_dim: n
        nodes: Strictly increasing positive radii
        values: f at the nodes
        log_weights: ln of weights w_i with sum_i w_i g(r_i) ~ integral_0^inf g(r) r^{n-1} dr
        derivative_values: f' at the nodes, if known
        algebraic_tail: True for power-law profiles (looser tolerance applies)
    """

    ambient_dim: int
    nodes: NDArray[np.float64] = field(repr=False)
    values: NDArray[np.float64] = field(repr=False)
    log_weights: NDArray[np.float64] = field(repr=False)
    derivative_values: NDArray[np.float64] | None = field(default=None, repr=False)
    algebraic_tail: bool = False

    @property
    def node_count(self) -> int:
        return int(self.nodes.size)

    @property
    def weights(self) -> NDArray[np.float64]:
        """Plain quadrature weights; may overflow to inf for very large n."""
        with np.errstate(over="ignore"):
            return np.exp(self.log_weights)

    @property
    def log_surface(self) -> float:
        """ln of the unit-sphere surface area in R^n."""
        return sphere_surface_log(self.ambient_dim)

    @property
    def resolution(self) -> str:
        return f"radial:n={self.ambient_dim},nodes={self.node_count}"

    def scaled(self, factor: float) -> "RadialProfile":
        """The profile of factor * f on the same nodes."""
        derivative = None if self.derivative_values is None else factor * self.derivative_values
        return _freeze(
            RadialProfile(
                ambient_dim=self.ambient_dim,
                nodes=self.nodes,
                values=factor * self.values,
                log_weights=self.log_weights,
                derivative_values=derivative,
                algebraic_tail=self.algebraic_tail,
            )
        )


def _freeze(profile: RadialProfile) -> RadialProfile:
    for array in (profile.nodes, profile.values, profile.log_weights, profile.derivative_values):
        if array is not None:
            array.setflags(write=False)
    return profile


def quadrature_rule(
    n: int, node_count: int = DEFAULT_NODE_COUNT, t_max: float = DEFAULT_T_MAX
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Nodes and log weights for integral_0^inf g(r) r^{n-1} dr.

    Returns:
        (nodes, log_weights)

    Raises:
        DomainError: If n < 1 or node_count < MIN_NODE_COUNT
    """
    dim = check_dimension(n)
    if node_count < MIN_NODE_COUNT:
        raise DomainError(f"node_count must be >= {MIN_NODE_COUNT}", node_count=node_count)
    t = np.linspace(-t_max, t_max, node_count)
    step = t[1] - t[0]
    log_r = 0.5 * math.pi * np.sinh(t)
    # w = h * dr/dt * r^{n-1} with dr/dt = (pi/2) cosh(t) r
    log_weights = math.log(step) + math.log(0.5 * math.pi) + np.log(np.cosh(t)) + dim * log_r
    return np.exp(log_r), log_weights


def build_radial(
    f: RadialFunction,
    fprime: RadialFunction | None,
    n: int,
    node_count: int = DEFAULT_NODE_COUNT,
    *,
    algebraic_tail: bool = False,
) -> RadialProfile:
    """Sample a radial function (and optionally its derivative) at quadrature nodes.

    Args:
        f: Vectorised f(r)
        fprime: Vectorised f'(r), or None
        n: Ambient dimension
        node_count: Number of quadrature nodes, >= 32
        algebraic_tail: Mark the profile as power-law decaying

    Returns:
        RadialProfile on the double-exponential nodes

    Raises:
        DomainError: On bad parameters or non-finite values at nodes
    """
    nodes, log_weights = quadrature_rule(n, node_count)
    values = np.asarray(f(nodes), dtype=float) * np.ones_like(nodes)
    if not np.all(np.isfinite(values)):
        raise DomainError("radial values must be finite at every node")
    derivative = None
    if fprime is not None:
        derivative = np.asarray(fprime(nodes), dtype=float) * np.ones_like(nodes)
        if not np.all(np.isfinite(derivative)):
            raise DomainError("radial derivative values must be finite at every node")
    return _freeze(
        RadialProfile(
            ambient_dim=check_dimension(n),
            nodes=nodes,
            values=values,
            log_weights=log_weights,
            derivative_values=derivative,
            algebraic_tail=algebraic_tail,
        )
    )


def integrate_log(
    profile: RadialProfile,
    log_abs_g: NDArray[np.float64],
    factor: NDArray[np.float64] | None = None,
) -> tuple[float, float]:
    """Signed log-space integral over R^n of factor * exp(log_abs_g) at the nodes.

    Entries with log_abs_g = -inf are dropped, so 0 * log 0 terms vanish.

    Returns:
        (log of the absolute value, sign); (-inf, 0.0) for a zero integral
    """
    mask = np.isfinite(log_abs_g)
    if not np.any(mask):
        return -math.inf, 0.0
    exponents = profile.log_weights[mask] + log_abs_g[mask]
    coefficients = None if factor is None else factor[mask]
    log_abs, sign = logsumexp(exponents, b=coefficients, return_sign=True)
    if sign == 0.0:
        return -math.inf, 0.0
    return float(log_abs) + profile.log_surface, float(sign)


def integrate(
    profile: RadialProfile,
    log_abs_g: NDArray[np.float64],
    factor: NDArray[np.float64] | None = None,
) -> float:
    """Linear-space value of :func:`integrate_log`."""
    log_abs, sign = integrate_log(profile, log_abs_g, factor)
    if sign == 0.0:
        return 0.0
    return sign * math.exp(log_abs)


def log_abs(values: NDArray[np.float64]) -> NDArray[np.float64]:
    """ln |v| with -inf at zeros and no warnings."""
    with np.errstate(divide="ignore"):
        return np.log(np.abs(values))
