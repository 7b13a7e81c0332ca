"""Margin reports, the tolerance policy and CSV serialization."""

import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

from fraclog.fields.functionals import Field
from fraclog.fields.grid import GridField

SPECTRAL_TOLERANCE = 1e-6
POWER_LAW_TOLERANCE = 1e-4
EXACT_TOLERANCE = 1e-12

# Guard for relative_margin when rhs = 0.
DENOMINATOR_GUARD = 1e-300

CSV_HEADER = (
    "inequality_id",
    "params",
    "lhs",
    "rhs",
    "margin",
    "relative_margin",
    "resolution",
    "truncation_flag",
    "status",
)


@dataclass(frozen=True)
class Discretization:
    """How the two sides of an inequality were evaluated.

    Attributes:
        kind: "grid", "radial" or "exact" (scalar lemma, no discretization)
        resolution: Resolution tag written to the CSV
        truncated: Boundary-shell mass above threshold (grid only)
        power_law: Slowly decaying profile; the looser tolerance applies
    """

    kind: Literal["grid", "radial", "exact"]
    resolution: str
    truncated: bool = False
    power_law: bool = False

    @classmethod
    def of(cls, field_: Field) -> "Discretization":
        if isinstance(field_, GridField):
            return cls(
                kind="grid",
                resolution=field_.resolution,
                truncated=field_.truncated,
                power_law=field_.truncated,
            )
        return cls(kind="radial", resolution=field_.resolution, power_law=field_.algebraic_tail)

    @classmethod
    def exact(cls) -> "Discretization":
        return cls(kind="exact", resolution="exact")


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative tolerances by discretization, times a global scale.

    Exact lemma checks are measured against max(|rhs|, 1) so that roundoff near a
    zero right-hand side is still accepted.
    """

    spectral: float = SPECTRAL_TOLERANCE
    power_law: float = POWER_LAW_TOLERANCE
    exact: float = EXACT_TOLERANCE
    scale: float = 1.0

    def relative(self, discretization: Discretization) -> float:
        if discretization.kind == "exact":
            return self.scale * self.exact
        if discretization.power_law:
            return self.scale * self.power_law
        return self.scale * self.spectral

    def allowance(self, report: "MarginReport") -> float:
        """Largest negative margin still accepted, as a positive number."""
        tolerance = self.relative(report.discretization)
        if report.discretization.kind == "exact":
            return tolerance * max(abs(report.rhs), 1.0)
        return tolerance * abs(report.rhs)


DEFAULT_POLICY = TolerancePolicy()


@dataclass(frozen=True)
class MarginReport:
    """One evaluated inequality instance: rhs - lhs and its normalisation."""

    inequality_id: str
    params: dict[str, Any]
    lhs: float
    rhs: float
    margin: float
    relative_margin: float
    discretization: Discretization = field(default_factory=Discretization.exact)

    @classmethod
    def from_sides(
        cls,
        inequality_id: str,
        params: Mapping[str, Any],
        lhs: float,
        rhs: float,
        discretization: Discretization,
    ) -> "MarginReport":
        margin = rhs - lhs
        return cls(
            inequality_id=inequality_id,
            params=dict(params),
            lhs=lhs,
            rhs=rhs,
            margin=margin,
            relative_margin=margin / max(abs(rhs), DENOMINATOR_GUARD),
            discretization=discretization,
        )

    def passes(self, policy: TolerancePolicy = DEFAULT_POLICY) -> bool:
        """True when margin >= -allowance; NaN margins never pass."""
        return self.margin >= -policy.allowance(self)

    def csv_row(self, policy: TolerancePolicy = DEFAULT_POLICY) -> list[str]:
        return [
            self.inequality_id,
            format_params(self.params),
            format_float(self.lhs),
            format_float(self.rhs),
            format_float(self.margin),
            format_float(self.relative_margin),
            self.discretization.resolution,
            "1" if self.discretization.truncated else "0",
            "pass" if self.passes(policy) else "fail",
        ]


@dataclass(frozen=True)
class SkippedCheck:
    """A parameter tuple rejected by domain validation before evaluation."""

    inequality_id: str
    params: dict[str, Any]
    reason: str

    def csv_row(self, policy: TolerancePolicy = DEFAULT_POLICY) -> list[str]:
        del policy
        return [self.inequality_id, format_params(self.params), "", "", "", "", "", "", f"skipped: {self.reason}"]


CheckResult = MarginReport | SkippedCheck


def format_float(value: float) -> str:
    """Shortest round-trip decimal form."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    return repr(value)


def format_params(params: Mapping[str, Any]) -> str:
    """key=value pairs joined by ';' in insertion order."""
    parts = []
    for key, value in params.items():
        text = format_float(value) if isinstance(value, float) else str(value)
        parts.append(f"{key}={text}")
    return ";".join(parts)
