"""Lp norms, entropy functionals and gradient norms on grid and radial fields."""

import math

import numpy as np
from scipy.special import xlogy

from fraclog.errors import DomainError, ZeroFieldError
from fraclog.fields.grid import GridField
from fraclog.fields.radial import RadialProfile, integrate, integrate_log, log_abs

Field = GridField | RadialProfile


def _check_exponent(p: float, name: str = "p", *, minimum: float = 1.0, strict: bool = False) -> float:
    value = float(p)
    bad = value <= minimum if strict else value < minimum
    if not math.isfinite(value) or bad:
        relation = ">" if strict else ">="
        raise DomainError(f"exponent {name} must be {relation} {minimum}", **{name: p})
    return value


def lp_norm_pow_log(field_: Field, p: float) -> float:
    """ln of integral |f|^p; -inf for the zero field."""
    exponent = _check_exponent(p)
    if isinstance(field_, GridField):
        total = float(np.sum(np.abs(field_.samples) ** exponent)) * field_.cell_volume
        return math.log(total) if total > 0.0 else -math.inf
    log_value, _ = integrate_log(field_, exponent * log_abs(field_.values))
    return log_value


def lp_norm(field_: Field, p: float) -> float:
    """||f||_p.

    Grid: (h^d sum |f_i|^p)^{1/p}. Radial: (omega_{n-1} sum w_i |f(r_i)|^p)^{1/p},
    accumulated in log space.

    Raises:
        DomainError: If p < 1
    """
    log_value = lp_norm_pow_log(field_, p)
    if log_value == -math.inf:
        return 0.0
    return math.exp(log_value / float(p))


def l2_norm_sq(field_: Field) -> float:
    """||f||_2^2."""
    log_value = lp_norm_pow_log(field_, 2.0)
    return 0.0 if log_value == -math.inf else math.exp(log_value)


def entropy_q(field_: Field, q: float) -> float:
    """integral |f|^q log(|f|^q / ||f||_q^q), with 0 log 0 = 0.

    Raises:
        DomainError: If q <= 1
        ZeroFieldError: If ||f||_q = 0
    """
    exponent = _check_exponent(q, "q", strict=True)
    log_norm = lp_norm_pow_log(field_, exponent)
    if log_norm == -math.inf:
        raise ZeroFieldError("entropy")

    if isinstance(field_, GridField):
        power = np.abs(field_.samples) ** exponent
        density = power / math.exp(log_norm)
        return float(np.sum(xlogy(power, density))) * field_.cell_volume

    log_power = exponent * log_abs(field_.values)
    log_ratio = np.where(np.isfinite(log_power), log_power - log_norm, 0.0)
    return integrate(field_, log_power, log_ratio)


def entropy(field_: Field) -> float:
    """integral |f|^2 log(|f|^2 / ||f||_2^2), the log-Sobolev entropy functional.

    Raises:
        ZeroFieldError: If f = 0
    """
    return entropy_q(field_, 2.0)


def _require_derivative(profile: RadialProfile) -> np.ndarray:
    if profile.derivative_values is None:
        raise DomainError("radial profile carries no derivative values")
    return profile.derivative_values


def gradient_norm_sq(profile: RadialProfile, p: float = 2.0) -> float:
    """integral |grad f|^p = omega_{n-1} integral |f'(r)|^p r^{n-1} dr (the p-th power).

    Raises:
        DomainError: If p < 1 or the profile has no derivative values
    """
    exponent = _check_exponent(p)
    derivative = _require_derivative(profile)
    return integrate(profile, exponent * log_abs(derivative))


def gradient_lp_norm(profile: RadialProfile, p: float) -> float:
    """||grad f||_p."""
    exponent = _check_exponent(p)
    derivative = _require_derivative(profile)
    log_value, _ = integrate_log(profile, exponent * log_abs(derivative))
    if log_value == -math.inf:
        return 0.0
    return math.exp(log_value / exponent)
