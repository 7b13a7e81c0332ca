"""Special functions evaluated in log space, and the lattice zeta function."""

from fraclog.special.gamma import (
    gamma_ratio_log,
    gamma_shift_ratio_log,
    log_gamma,
    sphere_surface_log,
    stirling_log_gamma,
)
from fraclog.special.lattice import lattice_zeta, upper_gamma

__all__ = [
    "gamma_ratio_log",
    "gamma_shift_ratio_log",
    "lattice_zeta",
    "log_gamma",
    "sphere_surface_log",
    "stirling_log_gamma",
    "upper_gamma",
]
