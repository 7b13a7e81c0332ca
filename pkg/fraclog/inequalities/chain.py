"""Lemma checks and step-by-step bound ladders of the log-Sobolev proofs.

Both proofs run the same three steps: a Jensen bound of the entropy by a log of a
norm ratio, the tangent-line bound log x <= b x - log b - 1, and the Sobolev (or
GNS) inequality applied to the higher norm.
"""

import math
from dataclasses import dataclass

from fraclog.constants.params import GnsParams, LsiParams, check_positive
from fraclog.constants.sharp import gns_constant_log, sobolev_constant
from fraclog.errors import DomainError, ZeroFieldError
from fraclog.fields.functionals import Field, entropy_q, gradient_lp_norm, lp_norm_pow_log
from fraclog.fields.radial import RadialProfile
from fraclog.inequalities.margins import energy_sq, field_dimension
from fraclog.inequalities.report import (
    DEFAULT_POLICY,
    Discretization,
    MarginReport,
    TolerancePolicy,
)


def _norm_pow_log(field_: Field, q: float, operation: str) -> float:
    value = lp_norm_pow_log(field_, q)
    if value == -math.inf:
        raise ZeroFieldError(operation)
    return value


def _jensen_bound(field_: Field, q: float, eps: float) -> tuple[float, float]:
    """((eps+1)/eps) ||f||_q^q log(||f||_{q eps + q}^q / ||f||_q^q) and ln ||f||_q^q."""
    log_q = _norm_pow_log(field_, q, "entropy interpolation")
    upper = q * eps + q
    log_ratio = q * lp_norm_pow_log(field_, upper) / upper - log_q
    return (eps + 1.0) / eps * math.exp(log_q) * log_ratio, log_q


def entropy_interpolation_check(field_: Field, q: float, eps: float) -> MarginReport:
    """Ent_q(f) <= ((eps+1)/eps) ||f||_q^q log(||f||_{q eps + q}^q / ||f||_q^q).

    Raises:
        DomainError: If q <= 1 or eps <= 0
        ZeroFieldError: If f = 0
    """
    eps = check_positive(eps, "eps")
    lhs = entropy_q(field_, q)
    rhs, _ = _jensen_bound(field_, float(q), eps)
    return MarginReport.from_sides(
        "interpolation", {"q": float(q), "eps": eps}, lhs, rhs, Discretization.of(field_)
    )


def log_linear_bound_check(x: float, b: float) -> MarginReport:
    """log x <= b x - log b - 1 for x, b > 0, with equality iff x = 1/b.

    Raises:
        DomainError: If x <= 0 or b <= 0
    """
    x = check_positive(x, "x")
    b = check_positive(b, "b")
    return MarginReport.from_sides(
        "logbound",
        {"x": x, "b": b},
        math.log(x),
        b * x - math.log(b) - 1.0,
        Discretization.exact(),
    )


@dataclass(frozen=True)
class ProofChain:
    """Successive upper bounds for the entropy term of a log-Sobolev proof.

    Attributes:
        inequality_id: Chain name used as the CSV id prefix
        params: Parameters of the chain
        labels: Step names, starting with the entropy itself
        values: Bound values in the same order
        discretization: Evaluation metadata of the field
    """

    inequality_id: str
    params: dict[str, object]
    labels: tuple[str, ...]
    values: tuple[float, ...]
    discretization: Discretization

    def links(self) -> list[MarginReport]:
        """One report per step, with lhs the previous bound and rhs the next."""
        return [
            MarginReport.from_sides(
                f"{self.inequality_id}:{label}", self.params, lower, upper, self.discretization
            )
            for label, lower, upper in zip(
                self.labels[1:], self.values[:-1], self.values[1:], strict=True
            )
        ]

    def is_monotone(self, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
        return all(link.passes(policy) for link in self.links())


def theorem1_chain(field_: Field, s: float, a: float) -> ProofChain:
    """Bounds of Ent(f) along the proof of the fractional log-Sobolev inequality.

    With 2* = 2n/(n-2s) and b = e a^2:
        jensen:     (n/2s) ||f||_2^2 log(||f||_{2*}^2 / ||f||_2^2)
        log-linear: (n/2s) (b ||f||_{2*}^2 - (1 + log b) ||f||_2^2)
        sobolev:    (n e a^2 / 2s) C(n,s) ||(-Delta)^{s/2} f||_2^2 - (n/s)(1 + log a) ||f||_2^2

    Raises:
        DomainError: If s is outside (0, n/2) or a <= 0
        ZeroFieldError: If f = 0
    """
    params = LsiParams(field_dimension(field_), s, a)
    n, order = params.n, params.s
    jensen, log_l2 = _jensen_bound(field_, 2.0, params.interpolation_eps)
    l2sq = math.exp(log_l2)
    critical = math.exp(2.0 * lp_norm_pow_log(field_, params.sobolev_exponent) / params.sobolev_exponent)
    b = math.e * params.a**2
    factor = n / (2.0 * order)
    log_linear = factor * (b * critical - (1.0 + math.log(b)) * l2sq)
    sobolev = factor * b * sobolev_constant(n, order) * energy_sq(field_, order)
    sobolev -= (n / order) * (1.0 + math.log(params.a)) * l2sq
    return ProofChain(
        inequality_id="theorem1-chain",
        params={"n": n, "s": order, "a": params.a},
        labels=("entropy", "jensen", "log-linear", "sobolev"),
        values=(entropy_q(field_, 2.0), jensen, log_linear, sobolev),
        discretization=Discretization.of(field_),
    )


def theorem2_chain(profile: RadialProfile, p: float, q: float, a: float) -> ProofChain:
    """Bounds of Ent_q(f) along the proof of the L^q log-Sobolev inequality.

    With r = p(q-1)/(p-1), k = p(q-1)/(q-p) and b = a:
        jensen:     k ||f||_q^q log(||f||_r^q / ||f||_q^q)
        log-linear: k (a ||f||_r^q - (1 + log a) ||f||_q^q)
        gns:        k a (S ||grad f||_p^theta ||f||_q^{1-theta})^q - k (1 + log a) ||f||_q^q

    Raises:
        DomainError: From the exponent checks or a <= 0
        ZeroFieldError: If f = 0
    """
    params = GnsParams.derive(profile.ambient_dim, p, q)
    scale = check_positive(a, "a")
    jensen, log_norm_q = _jensen_bound(profile, params.q, params.interpolation_eps)
    norm_q = math.exp(log_norm_q)
    k = params.entropy_factor
    r_norm_pow = math.exp(params.q * lp_norm_pow_log(profile, params.r) / params.r)
    log_linear = k * (scale * r_norm_pow - (1.0 + math.log(scale)) * norm_q)

    grad = gradient_lp_norm(profile, params.p)
    if grad == 0.0:
        raise DomainError("GNS bound needs a non-constant profile")
    log_g = gns_constant_log(params.n, params.p, params.q) + params.theta * math.log(grad)
    log_g += (1.0 - params.theta) * log_norm_q / params.q
    gns = k * scale * math.exp(params.q * log_g) - k * (1.0 + math.log(scale)) * norm_q
    return ProofChain(
        inequality_id="theorem2-chain",
        params={"n": params.n, "p": params.p, "q": params.q, "a": scale},
        labels=("entropy", "jensen", "log-linear", "gns"),
        values=(entropy_q(profile, params.q), jensen, log_linear, gns),
        discretization=Discretization.of(profile),
    )
