"""Uniform periodic grids on [-L, L)^d and the spectral fractional Laplacian."""

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from numbers import Integral

import numpy as np
from numpy.typing import NDArray

from fraclog.constants.params import check_positive
from fraclog.errors import DomainError
from fraclog.special.lattice import lattice_zeta

logger = logging.getLogger(__name__)

MAX_GRID_DIM = 3
MIN_POINTS_PER_AXIS = 16

# Relative L2 mass allowed in the boundary shell before a field is flagged.
SHELL_MASS_THRESHOLD = 1e-10
# Boundary shell thickness as a fraction of the points per axis.
SHELL_FRACTION = 1.0 / 16.0

GridFunction = Callable[[NDArray[np.float64]], NDArray[np.floating] | NDArray[np.complexfloating]]


@dataclass(frozen=True)
class GridField:
    """A complex function sampled on [-L, L)^d, extended periodically.

    Attributes:
        dim: Spatial dimension d in {1, 2, 3}
        half_width: L
        points_per_axis: N, a power of two
        samples: Read-only complex array of shape (N,) * d, axis order x_1..x_d
        shell_mass_fraction: Share of the L2 mass in the boundary shell
        truncated: True when the shell mass exceeds the admissibility threshold
    """

    dim: int
    half_width: float
    points_per_axis: int
    samples: NDArray[np.complex128] = field(repr=False)
    shell_mass_fraction: float = 0.0
    truncated: bool = False

    @property
    def spacing(self) -> float:
        """Grid spacing h = 2L / N."""
        return 2.0 * self.half_width / self.points_per_axis

    @property
    def cell_volume(self) -> float:
        """h^d."""
        return self.spacing**self.dim

    @property
    def resolution(self) -> str:
        """Short resolution tag used in reports."""
        return f"grid:d={self.dim},N={self.points_per_axis},L={self.half_width!r}"

    def axis(self) -> NDArray[np.float64]:
        """Coordinates -L + h i of one axis."""
        return -self.half_width + self.spacing * np.arange(self.points_per_axis)

    def with_samples(self, samples: NDArray[np.complexfloating]) -> "GridField":
        """A new field on the same grid with the given samples."""
        return make_field(self.dim, self.half_width, self.points_per_axis, samples)


def check_grid(d: object, L: object, N: object) -> tuple[int, float, int]:
    if isinstance(d, bool) or not isinstance(d, Integral) or not 1 <= d <= MAX_GRID_DIM:
        raise DomainError(f"grid dimension must be 1, 2 or {MAX_GRID_DIM}", d=d)
    half_width = check_positive(L, "L")
    if isinstance(N, bool) or not isinstance(N, Integral) or N < MIN_POINTS_PER_AXIS or N & (N - 1):
        raise DomainError(
            f"points per axis must be a power of two >= {MIN_POINTS_PER_AXIS}", N=N
        )
    return int(d), half_width, int(N)


def shell_mass_fraction(samples: NDArray[np.complexfloating]) -> float:
    """Fraction of sum |f|^2 lying within SHELL_FRACTION of any face of the box."""
    power = np.abs(samples) ** 2
    total = float(power.sum())
    if total == 0.0:
        return 0.0
    n = samples.shape[0]
    width = max(1, int(n * SHELL_FRACTION))
    interior = tuple(slice(width, n - width) for _ in range(samples.ndim))
    return max(0.0, (total - float(power[interior].sum())) / total)


def make_field(
    d: int, L: float, N: int, samples: NDArray[np.complexfloating]
) -> GridField:
    """Wrap an existing sample array as a GridField, running the admissibility checks.

    Raises:
        DomainError: On bad grid parameters, wrong shape or non-finite samples
    """
    d, half_width, N = check_grid(d, L, N)
    values = np.array(samples, dtype=np.complex128)
    if values.shape != (N,) * d:
        raise DomainError("samples must have shape (N,) * d", shape=values.shape, N=N, d=d)
    if not np.all(np.isfinite(values)):
        raise DomainError("grid samples must be finite")
    values.setflags(write=False)

    fraction = shell_mass_fraction(values)
    truncated = fraction > SHELL_MASS_THRESHOLD
    if truncated:
        logger.warning(
            f"Boundary shell holds {fraction:.2e} of the L2 mass (d={d}, N={N}, L={half_width}); "
            "field flagged as truncated"
        )
    return GridField(
        dim=d,
        half_width=half_width,
        points_per_axis=N,
        samples=values,
        shell_mass_fraction=fraction,
        truncated=truncated,
    )


def grid_points(d: int, L: float, N: int) -> NDArray[np.float64]:
    """Array of shape (N,) * d + (d,) holding the point -L + h (i_1, ..., i_d)."""
    d, half_width, N = check_grid(d, L, N)
    axis = -half_width + (2.0 * half_width / N) * np.arange(N)
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    return np.stack(mesh, axis=-1)


def build_grid(f: GridFunction, d: int, L: float, N: int) -> GridField:
    """Sample f on the grid [-L, L)^d with N points per axis.

    Args:
        f: Vectorised function taking points of shape (..., d) and returning values (...)
        d: Dimension, 1 to 3
        L: Half width of the box
        N: Points per axis, a power of two >= 16

    Returns:
        The sampled field, with the truncation flag set if the boundary shell holds more
        than SHELL_MASS_THRESHOLD of the L2 mass

    Raises:
        DomainError: On bad parameters or non-finite samples
    """
    points = grid_points(d, L, N)
    values = np.broadcast_to(np.asarray(f(points)), (N,) * d)
    return make_field(d, L, N, values)


@dataclass(frozen=True)
class FreqMultiplier:
    """Symbol (2 pi |xi|)^s on the lattice xi in (1/2L) {-N/2, ..., N/2 - 1}^d, FFT order."""

    order: float
    values: NDArray[np.float64] = field(repr=False)


def frequency_radius(d: int, L: float, N: int) -> NDArray[np.float64]:
    """|xi| on the FFT-ordered frequency lattice.

    The squared radius is summed over integer wavenumbers so that lattice points with
    equal |xi| get bitwise equal values.
    """
    d, half_width, N = check_grid(d, L, N)
    wavenumbers = np.fft.fftfreq(N, d=1.0 / N).round().astype(np.int64)
    mesh = np.meshgrid(*([wavenumbers] * d), indexing="ij")
    k_squared = sum(k * k for k in mesh)
    return np.sqrt(np.asarray(k_squared, dtype=float)) / (2.0 * half_width)


def frequency_multiplier(field_: GridField, s: float) -> FreqMultiplier:
    """The fractional Laplacian symbol of order s on the field's frequency lattice.

    Raises:
        DomainError: If s <= 0
    """
    order = check_positive(s, "s")
    radius = frequency_radius(field_.dim, field_.half_width, field_.points_per_axis)
    values = np.where(radius == 0.0, 0.0, (2.0 * math.pi * radius) ** order)
    values.setflags(write=False)
    return FreqMultiplier(order=order, values=values)


def fourier_transform(field_: GridField) -> NDArray[np.complex128]:
    """Continuous-normalised transform h^d FFT(f), approximating the integral of e^{-2 pi i x xi} f(x).

    The overall phase e^{2 pi i L xi} from the grid offset is omitted; it cancels in
    every norm and multiplier computed here.
    """
    return np.fft.fftn(field_.samples) * field_.cell_volume


def spectral_l2_norm_sq(field_: GridField) -> float:
    """Sum |f_hat_k|^2 / (2L)^d, which equals h^d sum |f_i|^2 by discrete Plancherel."""
    transform = fourier_transform(field_)
    return float(np.sum(np.abs(transform) ** 2)) / (2.0 * field_.half_width) ** field_.dim


def apply_fractional_laplacian(field_: GridField, s: float) -> GridField:
    """Sample-level (-Delta)^{s/2} f: multiply the FFT by (2 pi |xi|)^s and invert."""
    multiplier = frequency_multiplier(field_, s)
    values = np.fft.ifftn(multiplier.values * np.fft.fftn(field_.samples))
    return field_.with_samples(values)


def zero_mode_correction(field_: GridField, transform: NDArray[np.complex128], s: float) -> float:
    """Leading lattice-sum error of integral (2 pi |xi|)^{2s} |f_hat(xi)|^2 d xi.

    With phi = (2 pi)^{2s} |f_hat|^2 smooth and a = 2s, the lattice sum with spacing
    h = 1/2L satisfies

        h^d sum_{k != 0} |h k|^a phi(h k) - integral
            = h^{d+a} Z_d(-a) phi(0) + h^{d+a+2} Z_d(-a-2) Laplacian(phi)(0) / (2d) + O(h^{d+a+4})

    where Z_d is the lattice zeta function. The error depends on L only, not on N, and
    vanishes for integer s.
    """
    if float(s).is_integer():
        return 0.0
    d = field_.dim
    a = 2.0 * s
    h = 1.0 / (2.0 * field_.half_width)
    power = (2.0 * math.pi) ** a * np.abs(transform) ** 2
    origin = (0,) * d
    laplacian = 0.0
    for axis in range(d):
        # fourth-order central difference along this axis
        samples = []
        for offset in (-2, -1, 0, 1, 2):
            index = [0] * d
            index[axis] = offset
            samples.append(float(power[tuple(index)]))
        laplacian += float(np.dot((-1.0, 16.0, -30.0, 16.0, -1.0), samples)) / 12.0
    laplacian /= h * h
    return (
        h ** (d + a) * lattice_zeta(d, -a) * float(power[origin])
        + h ** (d + a + 2) * lattice_zeta(d, -a - 2.0) * laplacian / (2 * d)
    )


def frac_half_norm_sq(field_: GridField, s: float) -> float:
    """Spectral ||(-Delta)^{s/2} f||_2^2 = integral (2 pi |xi|)^{2s} |f_hat(xi)|^2 d xi.

    The lattice sum is corrected at the zero mode for non-integer s, so the estimate
    converges in L as well as in N.

    Raises:
        DomainError: If s <= 0
    """
    order = check_positive(s, "s")
    multiplier = frequency_multiplier(field_, 2.0 * order)
    transform = fourier_transform(field_)
    total = float(np.sum(multiplier.values * np.abs(transform) ** 2))
    return total / (2.0 * field_.half_width) ** field_.dim - zero_mode_correction(field_, transform, order)


def second_difference_laplacian(field_: GridField) -> GridField:
    """Periodic centred second-difference Laplacian, summed over axes."""
    h2 = field_.spacing**2
    samples = field_.samples
    result = np.zeros_like(samples)
    for axis in range(field_.dim):
        result += (np.roll(samples, 1, axis) - 2.0 * samples + np.roll(samples, -1, axis)) / h2
    return field_.with_samples(result)
