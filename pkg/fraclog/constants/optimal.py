"""Closed-form optimal scale a for the log-Sobolev inequalities at a fixed function."""

import math
from collections.abc import Callable

from scipy.optimize import minimize_scalar

from fraclog.constants.params import check_dimension, check_order, check_positive
from fraclog.constants.sharp import sobolev_constant


def optimal_a_theorem1(l2sq: float, fracsq: float, n: int, s: float) -> float:
    """Minimiser of a -> (n e a^2 / 2s) C(n,s) fracsq - (n/s)(1 + log a) l2sq.

    Args:
        l2sq: ||f||_2^2
        fracsq: ||(-Delta)^{s/2} f||_2^2
        n: Dimension
        s: Order, 0 < s < n/2

    Returns:
        a* = sqrt(l2sq / (e C(n,s) fracsq))

    Raises:
        DomainError: On non-positive norms or s outside (0, n/2)
    """
    l2 = check_positive(l2sq, "l2sq")
    frac = check_positive(fracsq, "fracsq")
    dim = check_dimension(n)
    order = check_order(dim, s)
    return math.sqrt(l2 / (math.e * sobolev_constant(dim, order) * frac))


def optimal_a_lieb_loss(l2sq: float, gradsq: float, n: int) -> float:
    """Minimiser of a -> (a^2/pi) gradsq - n (1 + log a) l2sq, i.e. sqrt(n pi l2sq / (2 gradsq)).

    Raises:
        DomainError: On non-positive inputs
    """
    l2 = check_positive(l2sq, "l2sq")
    grad = check_positive(gradsq, "gradsq")
    dim = check_dimension(n)
    return math.sqrt(dim * math.pi * l2 / (2.0 * grad))


def minimize_margin_over_a(
    margin: Callable[[float], float],
    a_guess: float,
    *,
    decades: float = 2.0,
    xatol: float = 1e-12,
) -> float:
    """Numerically minimise a margin function of the scale a.

    Searches log a in [log a_guess - decades ln 10, log a_guess + decades ln 10].

    Args:
        margin: Margin as a function of a
        a_guess: Centre of the search bracket
        decades: Half-width of the bracket in powers of ten
        xatol: Absolute tolerance on log a

    Returns:
        The numerically optimal a
    """
    centre = math.log(check_positive(a_guess, "a_guess"))
    half_width = decades * math.log(10.0)
    result = minimize_scalar(
        lambda log_a: margin(math.exp(log_a)),
        bounds=(centre - half_width, centre + half_width),
        method="bounded",
        options={"xatol": xatol},
    )
    return math.exp(float(result.x))
