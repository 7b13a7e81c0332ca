"""Margin evaluators for the Sobolev, GNS and log-Sobolev inequalities.

Each evaluator returns a MarginReport with margin = rhs - lhs. Dimensions are always
taken from the field itself: the grid dimension d for grids, the ambient n for radial
profiles.
"""

import logging
import math
from typing import Literal

from fraclog.constants.params import GnsParams, LsiParams, check_order, check_positive
from fraclog.constants.sharp import (
    gns_constant_log,
    lieb_loss_rhs_constant,
    lsi_rhs_constant,
    sobolev_constant,
)
from fraclog.errors import DomainError, ZeroFieldError
from fraclog.fields.functionals import (
    Field,
    entropy,
    entropy_q,
    gradient_lp_norm,
    gradient_norm_sq,
    l2_norm_sq,
    lp_norm,
    lp_norm_pow_log,
)
from fraclog.fields.grid import GridField, frac_half_norm_sq
from fraclog.fields.radial import RadialProfile
from fraclog.inequalities.report import Discretization, MarginReport

logger = logging.getLogger(__name__)

Theorem2Form = Literal["proof", "stated"]


def field_dimension(field_: Field) -> int:
    return field_.dim if isinstance(field_, GridField) else field_.ambient_dim


def energy_sq(field_: Field, s: float) -> float:
    """||(-Delta)^{s/2} f||_2^2: spectral on grids, ||grad f||_2^2 (s = 1 only) on radial profiles.

    Raises:
        DomainError: For radial profiles with s != 1 or without derivative values
    """
    if isinstance(field_, GridField):
        return frac_half_norm_sq(field_, s)
    if s != 1.0:
        raise DomainError("radial profiles only support the gradient energy s = 1", s=s)
    return gradient_norm_sq(field_)


def _require_nonzero(field_: Field, operation: str) -> float:
    l2sq = l2_norm_sq(field_)
    if l2sq == 0.0:
        raise ZeroFieldError(operation)
    return l2sq


def _log(report: MarginReport) -> MarginReport:
    logger.debug(
        f"{report.inequality_id} {report.params}: lhs={report.lhs!r} rhs={report.rhs!r} "
        f"relative_margin={report.relative_margin:.3e}"
    )
    return report


def lieb_loss_margin(field_: Field, a: float) -> MarginReport:
    """Sharp log-Sobolev inequality with scale a.

    lhs = Ent(f) + n (1 + log a) ||f||_2^2, rhs = (a^2 / pi) ||grad f||_2^2.

    Raises:
        DomainError: If a <= 0
        ZeroFieldError: If f = 0
    """
    scale = check_positive(a, "a")
    n = field_dimension(field_)
    l2sq = _require_nonzero(field_, "lieb-loss margin")
    lhs = entropy(field_) + n * (1.0 + math.log(scale)) * l2sq
    rhs = lieb_loss_rhs_constant(scale) * energy_sq(field_, 1.0)
    return _log(
        MarginReport.from_sides(
            "lieb-loss", {"n": n, "a": scale}, lhs, rhs, Discretization.of(field_)
        )
    )


def theorem1_margin(field_: Field, s: float, a: float) -> MarginReport:
    """Fractional log-Sobolev inequality of order s with scale a.

    lhs = Ent(f) + (n/s)(1 + log a) ||f||_2^2,
    rhs = (n e a^2 / 2s) C(n, s) ||(-Delta)^{s/2} f||_2^2.

    Raises:
        DomainError: If s is outside (0, n/2) or a <= 0
        ZeroFieldError: If f = 0
    """
    params = LsiParams(field_dimension(field_), s, a)
    l2sq = _require_nonzero(field_, "theorem1 margin")
    lhs = entropy(field_) + (params.n / params.s) * (1.0 + math.log(params.a)) * l2sq
    rhs = lsi_rhs_constant(params) * energy_sq(field_, params.s)
    return _log(
        MarginReport.from_sides(
            "theorem1",
            {"n": params.n, "s": params.s, "a": params.a},
            lhs,
            rhs,
            Discretization.of(field_),
        )
    )


def sobolev_margin(field_: Field, s: float) -> MarginReport:
    """Sharp Sobolev inequality ||f||_{2d/(d-2s)}^2 <= C(d, s) ||(-Delta)^{s/2} f||_2^2.

    Raises:
        DomainError: If s is outside (0, d/2)
    """
    n = field_dimension(field_)
    order = check_order(n, s)
    exponent = 2.0 * n / (n - 2.0 * order)
    lhs = lp_norm(field_, exponent) ** 2
    rhs = sobolev_constant(n, order) * energy_sq(field_, order)
    return _log(
        MarginReport.from_sides(
            "sobolev", {"n": n, "s": order}, lhs, rhs, Discretization.of(field_)
        )
    )


def sobolev_margin_radial_s1(profile: RadialProfile) -> MarginReport:
    """Sharp Sobolev inequality at s = 1 using the radial gradient, for any n >= 3.

    Raises:
        DomainError: If n <= 2 or the profile has no derivative values
    """
    n = profile.ambient_dim
    if n <= 2:
        raise DomainError("radial s=1 Sobolev needs n >= 3", n=n)
    exponent = 2.0 * n / (n - 2.0)
    lhs = lp_norm(profile, exponent) ** 2
    rhs = sobolev_constant(n, 1.0) * gradient_norm_sq(profile)
    return _log(
        MarginReport.from_sides(
            "sobolev-radial", {"n": n, "s": 1.0}, lhs, rhs, Discretization.of(profile)
        )
    )


def _gns_rhs_log(profile: RadialProfile, params: GnsParams) -> float:
    """ln(S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta})."""
    grad = gradient_lp_norm(profile, params.p)
    if grad == 0.0:
        raise ZeroFieldError("GNS right-hand side")
    log_rhs = gns_constant_log(params.n, params.p, params.q) + params.theta * math.log(grad)
    if params.theta < 1.0:
        log_rhs += (1.0 - params.theta) * lp_norm_pow_log(profile, params.q) / params.q
    return log_rhs


def gns_margin(profile: RadialProfile, p: float, q: float) -> MarginReport:
    """GNS inequality ||f||_r <= S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta}.

    Raises:
        DomainError: From the exponent checks, or without derivative values
    """
    params = GnsParams.derive(profile.ambient_dim, p, q)
    lhs = lp_norm(profile, params.r)
    rhs = math.exp(_gns_rhs_log(profile, params))
    return _log(
        MarginReport.from_sides(
            "gns",
            {"n": params.n, "p": params.p, "q": params.q},
            lhs,
            rhs,
            Discretization.of(profile),
        )
    )


def theorem2_margin(
    profile: RadialProfile, p: float, q: float, a: float, form: Theorem2Form = "proof"
) -> MarginReport:
    """L^q log-Sobolev inequality derived from GNS, with scale a.

    With k = p(q-1)/(q-p) and G = S(n,p,q) ||grad f||_p^theta ||f||_q^{1-theta}:

        lhs = Ent_q(f) + k (1 + log a) ||f||_q^q
        rhs = a k G^q            (form="proof", homogeneous of degree q)
        rhs = a k G              (form="stated", as printed)

    Raises:
        DomainError: From the exponent checks, a <= 0 or an unknown form
        ZeroFieldError: If f = 0
    """
    if form not in ("proof", "stated"):
        raise DomainError("theorem2 form must be 'proof' or 'stated'", form=form)
    params = GnsParams.derive(profile.ambient_dim, p, q)
    scale = check_positive(a, "a")
    log_norm_q = lp_norm_pow_log(profile, params.q)
    if log_norm_q == -math.inf:
        raise ZeroFieldError("theorem2 margin")
    k = params.entropy_factor
    lhs = entropy_q(profile, params.q) + k * (1.0 + math.log(scale)) * math.exp(log_norm_q)
    power = params.q if form == "proof" else 1.0
    rhs = scale * k * math.exp(power * _gns_rhs_log(profile, params))
    return _log(
        MarginReport.from_sides(
            "theorem2",
            {"n": params.n, "p": params.p, "q": params.q, "a": scale, "form": form},
            lhs,
            rhs,
            Discretization.of(profile),
        )
    )
