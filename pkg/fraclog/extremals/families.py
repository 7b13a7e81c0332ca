"""Extremal families of the inequalities, with analytic oracles where available."""

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from fraclog.constants.params import (
    check_dimension,
    check_order,
    check_positive,
)
from fraclog.constants.sharp import gns_exponents
from fraclog.errors import DomainError, IntegrabilityError
from fraclog.fields.grid import MAX_GRID_DIM, GridField, build_grid
from fraclog.fields.radial import DEFAULT_NODE_COUNT, RadialProfile, build_radial

Representation = Literal["grid", "radial"]

DEFAULT_HALF_WIDTH = 8.0
DEFAULT_GRID_POINTS = 256


@dataclass(frozen=True)
class GaussianOracle:
    """Closed-form norms of exp(-pi |x|^2 / (2 a^2)) on R^n."""

    n: int
    a: float

    @property
    def l2sq(self) -> float:
        """||f||_2^2 = a^n."""
        return self.a**self.n

    @property
    def gradsq(self) -> float:
        """||grad f||_2^2 = n pi a^{n-2} / 2."""
        return self.n * math.pi * self.a ** (self.n - 2) / 2.0

    @property
    def ent(self) -> float:
        """Entropy -a^n (n/2 + n log a)."""
        return -(self.a**self.n) * (0.5 * self.n + self.n * math.log(self.a))

    @property
    def lieb_loss_value(self) -> float:
        """Common value n a^n / 2 of both sides of the sharp log-Sobolev inequality."""
        return 0.5 * self.n * self.a**self.n


def _check_representation(representation: str, n: int) -> None:
    if representation not in ("grid", "radial"):
        raise DomainError("representation must be 'grid' or 'radial'", representation=representation)
    if representation == "grid" and n > MAX_GRID_DIM:
        raise DomainError(f"grid representation needs n <= {MAX_GRID_DIM}", n=n)


def _squared_radius(points: NDArray[np.float64], center: NDArray[np.float64] | None) -> NDArray[np.float64]:
    shifted = points if center is None else points - center
    return np.sum(shifted**2, axis=-1)


def gaussian(
    n: int,
    a: float,
    representation: Representation = "radial",
    *,
    node_count: int = DEFAULT_NODE_COUNT,
    half_width: float = DEFAULT_HALF_WIDTH,
    points_per_axis: int = DEFAULT_GRID_POINTS,
) -> tuple[GridField | RadialProfile, GaussianOracle]:
    """The log-Sobolev extremal exp(-pi |x|^2 / (2 a^2)) and its oracle.

    Raises:
        DomainError: On a <= 0 or a representation/dimension mismatch
    """
    dim = check_dimension(n)
    scale = check_positive(a, "a")
    _check_representation(representation, dim)
    alpha = math.pi / (2.0 * scale**2)
    oracle = GaussianOracle(n=dim, a=scale)

    if representation == "grid":
        grid = build_grid(
            lambda x: np.exp(-alpha * _squared_radius(x, None)), dim, half_width, points_per_axis
        )
        return grid, oracle

    profile = build_radial(
        lambda r: np.exp(-alpha * r * r),
        lambda r: -2.0 * alpha * r * np.exp(-alpha * r * r),
        dim,
        node_count,
    )
    return profile, oracle


def aubin_talenti(
    n: int,
    s: float,
    c: float = 1.0,
    representation: Representation = "radial",
    *,
    center: NDArray[np.float64] | None = None,
    node_count: int = DEFAULT_NODE_COUNT,
    half_width: float = DEFAULT_HALF_WIDTH,
    points_per_axis: int = DEFAULT_GRID_POINTS,
) -> GridField | RadialProfile:
    """Sharp Sobolev extremal (c^2 + |x - x0|^2)^{-(n - 2s)/2}.

    The center is a vector in R^n (origin by default); it is only honoured on grids.

    Raises:
        DomainError: If s is outside (0, n/2), c = 0, or the representation does not fit n
    """
    dim = check_dimension(n)
    order = check_order(dim, s)
    if c == 0 or not math.isfinite(c):
        raise DomainError("c must be a nonzero real", c=c)
    _check_representation(representation, dim)
    power = 0.5 * (dim - 2.0 * order)
    c2 = float(c) ** 2

    if representation == "grid":
        shift = None if center is None else np.asarray(center, dtype=float).reshape(dim)
        return build_grid(
            lambda x: (c2 + _squared_radius(x, shift)) ** (-power), dim, half_width, points_per_axis
        )

    if center is not None:
        raise DomainError("radial profiles are centred at the origin")
    return build_radial(
        lambda r: (c2 + r * r) ** (-power),
        lambda r: -2.0 * power * r * (c2 + r * r) ** (-power - 1.0),
        dim,
        node_count,
        algebraic_tail=True,
    )


def gns_extremal(
    n: int,
    p: float,
    q: float,
    c: float = 1.0,
    *,
    node_count: int = DEFAULT_NODE_COUNT,
) -> RadialProfile:
    """GNS extremal (1 + c r^{p/(p-1)})^{-(p-1)/(q-p)} with analytic derivative.

    Raises:
        DomainError: From the exponent checks, or if c <= 0
        IntegrabilityError: If a norm used by the GNS inequality diverges
    """
    params = gns_exponents(n, p, q)
    coeff = check_positive(c, "c")
    conjugate = params.p / (params.p - 1.0)
    beta = (params.p - 1.0) / (params.q - params.p)
    decay = conjugate * beta

    # |f| ~ r^{-decay}, |f'| ~ r^{-decay-1}; integral of r^{-k} r^{n-1} needs k > n.
    needed = {
        "L^q": params.q * decay,
        "L^r": params.r * decay,
        "gradient L^p": params.p * (decay + 1.0),
    }
    for norm, tail_exponent in needed.items():
        if tail_exponent <= params.n:
            raise IntegrabilityError(
                f"{norm} norm of the GNS extremal diverges",
                n=params.n, p=params.p, q=params.q, tail_exponent=tail_exponent,
            )

    def profile(r: NDArray[np.float64]) -> NDArray[np.float64]:
        return (1.0 + coeff * r**conjugate) ** (-beta)

    def derivative(r: NDArray[np.float64]) -> NDArray[np.float64]:
        base = 1.0 + coeff * r**conjugate
        return -beta * coeff * conjugate * r ** (conjugate - 1.0) * base ** (-beta - 1.0)

    return build_radial(profile, derivative, params.n, node_count, algebraic_tail=True)
