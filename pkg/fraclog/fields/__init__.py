"""Discretised functions and the functional calculus on them."""

from fraclog.fields.functionals import (
    Field,
    entropy,
    entropy_q,
    gradient_lp_norm,
    gradient_norm_sq,
    l2_norm_sq,
    lp_norm,
)
from fraclog.fields.grid import (
    FreqMultiplier,
    GridField,
    apply_fractional_laplacian,
    build_grid,
    frac_half_norm_sq,
    frequency_multiplier,
    make_field,
    spectral_l2_norm_sq,
)
from fraclog.fields.io import load_field, save_field
from fraclog.fields.radial import RadialProfile, build_radial

__all__ = [
    "Field",
    "FreqMultiplier",
    "GridField",
    "RadialProfile",
    "apply_fractional_laplacian",
    "build_grid",
    "build_radial",
    "entropy",
    "entropy_q",
    "frac_half_norm_sq",
    "frequency_multiplier",
    "gradient_lp_norm",
    "gradient_norm_sq",
    "l2_norm_sq",
    "load_field",
    "lp_norm",
    "make_field",
    "save_field",
    "spectral_l2_norm_sq",
]
