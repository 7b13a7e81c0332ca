"""Margin evaluators and proof-chain checks."""

from fraclog.inequalities.chain import (
    ProofChain,
    entropy_interpolation_check,
    log_linear_bound_check,
    theorem1_chain,
    theorem2_chain,
)
from fraclog.inequalities.margins import (
    gns_margin,
    lieb_loss_margin,
    sobolev_margin,
    sobolev_margin_radial_s1,
    theorem1_margin,
    theorem2_margin,
)
from fraclog.inequalities.report import (
    CSV_HEADER,
    CheckResult,
    Discretization,
    MarginReport,
    SkippedCheck,
    TolerancePolicy,
)

__all__ = [
    "CSV_HEADER",
    "CheckResult",
    "Discretization",
    "MarginReport",
    "ProofChain",
    "SkippedCheck",
    "TolerancePolicy",
    "entropy_interpolation_check",
    "gns_margin",
    "lieb_loss_margin",
    "log_linear_bound_check",
    "sobolev_margin",
    "sobolev_margin_radial_s1",
    "theorem1_chain",
    "theorem1_margin",
    "theorem2_chain",
    "theorem2_margin",
]
