"""Seeded random test fields.

Every constructor draws from ``numpy.random.Generator(PCG64(seed))``, whose stream is
stable across platforms and numpy releases, so a seed fully determines the field.
"""

import logging
from numbers import Integral

import numpy as np
from numpy.typing import NDArray

from fraclog.constants.params import check_dimension
from fraclog.errors import DomainError
from fraclog.fields.grid import GridField, check_grid, grid_points, make_field
from fraclog.fields.radial import DEFAULT_NODE_COUNT, RadialProfile, build_radial

logger = logging.getLogger(__name__)

DEFAULT_COMPONENTS = 3


def _generator(seed: int) -> np.random.Generator:
    if isinstance(seed, bool) or not isinstance(seed, Integral) or seed < 0:
        raise DomainError("seed must be a non-negative integer", seed=seed)
    return np.random.Generator(np.random.PCG64(int(seed)))


def _check_count(count: int, name: str = "count") -> int:
    if isinstance(count, bool) or not isinstance(count, Integral) or count < 1:
        raise DomainError(f"{name} must be an integer >= 1", **{name: count})
    return int(count)


def random_mixture(seed: int, d: int, count: int, L: float, N: int) -> GridField:
    """Sum of `count` complex-weighted Gaussians on the grid [-L, L)^d.

    Centers are uniform in [-L/4, L/4]^d, widths uniform in [L/32, L/8] and amplitudes
    uniform in the closed unit disk. The nearest boundary-shell point is at least five
    widths from any center, which keeps the shell mass below the truncation threshold.

    Raises:
        DomainError: On bad grid parameters, seed or count
    """
    d, L, N = check_grid(d, L, N)
    count = _check_count(count)
    rng = _generator(seed)
    centers = rng.uniform(-L / 4.0, L / 4.0, size=(count, d))
    widths = rng.uniform(L / 32.0, L / 8.0, size=count)
    moduli = np.sqrt(rng.uniform(0.0, 1.0, size=count))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=count)
    amplitudes = moduli * np.exp(1j * phases)

    points = grid_points(d, L, N)
    samples = np.zeros((N,) * d, dtype=np.complex128)
    for center, width, amplitude in zip(centers, widths, amplitudes, strict=True):
        r2 = np.sum((points - center) ** 2, axis=-1)
        samples += amplitude * np.exp(-r2 / (2.0 * width**2))
    return make_field(d, L, N, samples)


def mixture_corpus(
    seed: int, count: int, d: int, L: float, N: int, components: int = DEFAULT_COMPONENTS
) -> list[GridField]:
    """`count` mixtures with seeds seed, seed + 1, ..., each of `components` Gaussians."""
    count = _check_count(count)
    fields = [random_mixture(seed + i, d, components, L, N) for i in range(count)]
    flagged = sum(field_.truncated for field_ in fields)
    if flagged:
        logger.warning(f"{flagged} of {count} corpus fields flagged as truncated (seed={seed})")
    return fields


def random_radial(
    seed: int,
    n: int,
    count: int = DEFAULT_COMPONENTS,
    node_count: int = DEFAULT_NODE_COUNT,
) -> RadialProfile:
    """Positive radial mixture sum_k c_k exp(-alpha_k r^2) with analytic derivative.

    Weights c_k are uniform in [0.25, 1]; rates alpha_k are log-uniform in [0.1, 10].
    """
    dim = check_dimension(n)
    count = _check_count(count)
    rng = _generator(seed)
    weights = rng.uniform(0.25, 1.0, size=count)
    rates = np.exp(rng.uniform(np.log(0.1), np.log(10.0), size=count))

    def profile(r: NDArray[np.float64]) -> NDArray[np.float64]:
        r2 = np.multiply.outer(r * r, rates)
        return np.sum(weights * np.exp(-r2), axis=-1)

    def derivative(r: NDArray[np.float64]) -> NDArray[np.float64]:
        r2 = np.multiply.outer(r * r, rates)
        return -2.0 * r * np.sum(weights * rates * np.exp(-r2), axis=-1)

    return build_radial(profile, derivative, dim, node_count)


def radial_corpus(
    seed: int, count: int, n: int, node_count: int = DEFAULT_NODE_COUNT
) -> list[RadialProfile]:
    """`count` radial mixtures with seeds seed, seed + 1, ..."""
    count = _check_count(count)
    return [random_radial(seed + i, n, DEFAULT_COMPONENTS, node_count) for i in range(count)]


def indicator_field(d: int, L: float, N: int, cells: int, value: complex = 1.0) -> GridField:
    """Constant `value` on a centred cube of `cells` grid cells per side, zero elsewhere.

    |f| is constant on its support, which makes the entropy interpolation bound an
    equality for every exponent.

    Raises:
        DomainError: If the cube does not fit strictly inside the grid
    """
    d, L, N = check_grid(d, L, N)
    cells = _check_count(cells, "cells")
    if cells >= N:
        raise DomainError("indicator support must be smaller than the grid", cells=cells, N=N)
    if value == 0:
        raise DomainError("indicator value must be nonzero", value=value)
    start = N // 2 - cells // 2
    samples = np.zeros((N,) * d, dtype=np.complex128)
    samples[tuple(slice(start, start + cells) for _ in range(d))] = value
    return make_field(d, L, N, samples)
