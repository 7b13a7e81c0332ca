"""Extremal families and random test corpora."""

from fraclog.extremals.corpus import (
    indicator_field,
    mixture_corpus,
    radial_corpus,
    random_mixture,
    random_radial,
)
from fraclog.extremals.families import GaussianOracle, aubin_talenti, gaussian, gns_extremal

__all__ = [
    "GaussianOracle",
    "aubin_talenti",
    "gaussian",
    "gns_extremal",
    "indicator_field",
    "mixture_corpus",
    "radial_corpus",
    "random_mixture",
    "random_radial",
]
