"""Closed-form constants, exponents and optimal scales."""

from fraclog.constants.optimal import (
    minimize_margin_over_a,
    optimal_a_lieb_loss,
    optimal_a_theorem1,
)
from fraclog.constants.params import GnsParams, LsiParams
from fraclog.constants.sharp import (
    asymptotic_constant,
    asymptotic_ratio,
    gns_constant,
    gns_exponents,
    lieb_loss_rhs_constant,
    lsi_asymptotic_rhs_constant,
    lsi_rhs_constant,
    sobolev_constant,
)

__all__ = [
    "GnsParams",
    "LsiParams",
    "asymptotic_constant",
    "asymptotic_ratio",
    "gns_constant",
    "gns_exponents",
    "lieb_loss_rhs_constant",
    "lsi_asymptotic_rhs_constant",
    "lsi_rhs_constant",
    "minimize_margin_over_a",
    "optimal_a_lieb_loss",
    "optimal_a_theorem1",
    "sobolev_constant",
]
