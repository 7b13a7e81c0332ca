"""Closed-form constants of the Sobolev, GNS and log-Sobolev inequalities.

Every gamma product is accumulated in log space and exponentiated once, so the
constants stay finite for dimensions in the millions.
"""

import math

from fraclog.constants.params import (
    GnsParams,
    LsiParams,
    check_dimension,
    check_order,
    check_positive,
)
from fraclog.special.gamma import gamma_ratio_log

_LOG_TWO = math.log(2.0)
_LOG_PI = math.log(math.pi)


def sobolev_constant_log(n: int, s: float) -> float:
    """ln C(n, s) for the sharp fractional Sobolev inequality.

    Raises:
        DomainError: If s is outside (0, n/2)
    """
    dim = check_dimension(n)
    order = check_order(dim, s)
    log_ratio = float(gamma_ratio_log(0.5 * dim - order, 0.5 * dim + order))
    log_power = float(gamma_ratio_log(float(dim), 0.5 * dim))
    return log_ratio - 2.0 * order * _LOG_TWO - order * _LOG_PI + (2.0 * order / dim) * log_power


def sobolev_constant(n: int, s: float) -> float:
    """C(n, s) = Gamma((n-2s)/2) / (2^{2s} pi^s Gamma((n+2s)/2)) * (Gamma(n)/Gamma(n/2))^{2s/n}.

    Args:
        n: Dimension
        s: Order, 0 < s < n/2

    Returns:
        The sharp constant in ||u||_{2n/(n-2s)}^2 <= C(n,s) ||(-Delta)^{s/2} u||_2^2

    Raises:
        DomainError: If s is outside (0, n/2)
    """
    return math.exp(sobolev_constant_log(n, s))


def lsi_rhs_constant(params: LsiParams) -> float:
    """Right-hand factor n e a^2 / (2s) * C(n, s) of the fractional log-Sobolev inequality."""
    factor = params.n * math.e * params.a**2 / (2.0 * params.s)
    return factor * sobolev_constant(params.n, params.s)


def lieb_loss_rhs_constant(a: float) -> float:
    """Right-hand factor a^2 / pi of the sharp log-Sobolev inequality.

    Raises:
        DomainError: If a <= 0
    """
    scale = check_positive(a, "a")
    return scale**2 / math.pi


def asymptotic_constant_log(n: int, s: float) -> float:
    """ln of the large-n approximant 2^{s - s/n} pi^{-s} e^{-s} n^{-s} of C(n, s)."""
    dim = check_dimension(n)
    order = check_order(dim, s)
    return (order - order / dim) * _LOG_TWO - order * _LOG_PI - order - order * math.log(dim)


def asymptotic_constant(n: int, s: float) -> float:
    """Large-n approximant 2^{s - s/n} pi^{-s} e^{-s} n^{-s} of C(n, s)."""
    return math.exp(asymptotic_constant_log(n, s))


def asymptotic_ratio(n: int, s: float) -> float:
    """C(n, s) divided by its large-n approximant; tends to 1 like 1 + 2s/n."""
    return math.exp(sobolev_constant_log(n, s) - asymptotic_constant_log(n, s))


def lsi_asymptotic_rhs_constant(params: LsiParams, *, drop_finite_n: bool = False) -> float:
    """Large-n form of the log-Sobolev right-hand factor.

    Args:
        params: Dimension, order and scale
        drop_finite_n: Use 2^{s-1} instead of 2^{s-1-s/n}

    Returns:
        2^{s-1-s/n} a^2 e^{1-s} n^{1-s} / (s pi^s), or the variant without the 2^{-s/n}
        factor; at s = 1 both approach a^2 / pi
    """
    n, s, a = params.n, params.s, params.a
    exponent = s - 1.0 if drop_finite_n else s - 1.0 - s / n
    log_value = (
        exponent * _LOG_TWO
        + 2.0 * math.log(a)
        + (1.0 - s)
        + (1.0 - s) * math.log(n)
        - math.log(s)
        - s * _LOG_PI
    )
    return math.exp(log_value)


def gns_exponents(n: int, p: float, q: float) -> GnsParams:
    """Exponents r, theta, delta of the GNS inequality for (n, p, q).

    Raises:
        DomainError: Naming the violated hypothesis (p-range, q-range or delta)
    """
    return GnsParams.derive(n, p, q)


def gns_constant_log(n: int, p: float, q: float) -> float:
    """ln of the optimal GNS constant S(n, p, q)."""
    params = gns_exponents(n, p, q)
    dim, p, q = params.n, params.p, params.q
    theta, delta, r = params.theta, params.delta, params.r

    log_value = theta * (math.log((q - p) / p) - 0.5 * _LOG_PI)
    log_value += (theta / p) * math.log(p * q / (dim * (q - p)))
    log_value += math.log(delta / (p * q)) / r
    gamma_part = float(gamma_ratio_log(q * (p - 1.0) / (q - p), (p - 1.0) / p * delta / (q - p)))
    gamma_part += float(gamma_ratio_log(0.5 * dim + 1.0, dim * (p - 1.0) / p + 1.0))
    log_value += (theta / dim) * gamma_part
    return log_value


def gns_constant(n: int, p: float, q: float) -> float:
    """Optimal constant S(n, p, q) in ||f||_r <= S ||grad f||_p^theta ||f||_q^{1-theta}.

    Raises:
        DomainError: If (n, p, q) violate 1 < p < n, p < q <= p(n-1)/(n-p)
    """
    return math.exp(gns_constant_log(n, p, q))
