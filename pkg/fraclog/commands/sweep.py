"""`fraclog sweep`: one inequality over a range of one parameter."""

import argparse
import logging
from dataclasses import replace
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from fraclog.commands.common import (
    INEQUALITIES,
    CheckParams,
    add_check_arguments,
    build_checks,
    check_params_from_args,
    field_source_from_args,
    parse_number_list,
    run_checks,
)
from fraclog.config import ConfigError, RunConfig, load_yaml_file
from fraclog.output import Check

logger = logging.getLogger(__name__)

SweepVariable = Literal["n", "s", "a", "p", "q", "resolution"]
INTEGER_VARIABLES = frozenset({"n", "resolution"})
FIXABLE = frozenset({"n", "d", "s", "a", "p", "q", "eps", "x", "b", "c", "field_a", "form"})


class SweepSpec(BaseModel):
    """Values of one swept variable; the other parameters stay fixed."""

    variable: SweepVariable
    values: list[float] | None = Field(default=None, description="Explicit values")
    start: float | None = None
    stop: float | None = None
    count: int | None = Field(default=None, ge=1)
    spacing: Literal["linear", "log"] = "linear"
    fixed: dict[str, float | int | str] = Field(default_factory=dict)

    @field_validator("fixed")
    @classmethod
    def validate_fixed(cls, v: dict[str, float | int | str]) -> dict[str, float | int | str]:
        """Only check parameters may be fixed."""
        unknown = set(v) - FIXABLE
        if unknown:
            raise ValueError(f"unknown fixed parameters: {sorted(unknown)}")
        return v

    @model_validator(mode="after")
    def validate_values(self) -> "SweepSpec":
        """Exactly one of an explicit list or (start, stop, count)."""
        ranged = (self.start, self.stop, self.count)
        if self.values is not None and any(v is not None for v in ranged):
            raise ValueError("give either values or start/stop/count, not both")
        if self.values is None and any(v is None for v in ranged):
            raise ValueError("start, stop and count are all required without values")
        if self.spacing == "log" and self.values is None:
            assert self.start is not None and self.stop is not None
            if self.start <= 0 or self.stop <= 0:
                raise ValueError("log spacing needs positive start and stop")
        return self

    def points(self) -> list[float]:
        if self.values is not None:
            return list(self.values)
        assert self.start is not None and self.stop is not None and self.count is not None
        if self.spacing == "log":
            return [float(v) for v in np.geomspace(self.start, self.stop, self.count)]
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


def add_parser(subparsers: Any, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "sweep",
        parents=parents,
        help="Sweep one parameter; out-of-domain tuples become skipped rows",
    )
    parser.add_argument("inequality", choices=INEQUALITIES)
    parser.add_argument("--spec", type=Path, help="YAML file holding a SweepSpec")
    parser.add_argument("--vary", choices=("n", "s", "a", "p", "q", "resolution"))
    parser.add_argument("--values", help="Comma separated values")
    parser.add_argument("--range", nargs=3, type=float, metavar=("START", "STOP", "COUNT"))
    parser.add_argument("--log-spacing", action="store_true", help="Geometric spacing for --range")
    add_check_arguments(parser)
    parser.set_defaults(handler=run)


def spec_from_args(args: argparse.Namespace) -> SweepSpec:
    """SweepSpec from --spec, or from --vary with --values / --range.

    Raises:
        ConfigError: If the spec is missing or invalid
    """
    try:
        if args.spec is not None:
            return SweepSpec.model_validate(load_yaml_file(args.spec))
        if args.vary is None:
            raise ConfigError("sweep needs --spec or --vary")
        raw: dict[str, Any] = {"variable": args.vary}
        if args.values is not None:
            raw["values"] = parse_number_list(args.values)
        if args.range is not None:
            start, stop, count = args.range
            raw.update(start=start, stop=stop, count=int(count))
            raw["spacing"] = "log" if args.log_spacing else "linear"
        return SweepSpec.model_validate(raw)
    except ValidationError as e:
        raise ConfigError(f"Invalid sweep specification: {e}") from e


def _apply(params: CheckParams, variable: str, value: float) -> CheckParams:
    if variable == "n":
        # Dimension drives both representations.
        return replace(params, n=int(value), d=int(value))
    if variable == "resolution":
        return replace(params, grid_points=int(value), node_count=int(value))
    return replace(params, **{variable: float(value)})


async def run(args: argparse.Namespace, config: RunConfig) -> int:
    spec = spec_from_args(args)
    params = check_params_from_args(args, config)
    if spec.fixed:
        params = replace(params, **spec.fixed)  # type: ignore[arg-type]
    source = field_source_from_args(args, config)

    checks: list[Check] = []
    for value in spec.points():
        swept = _apply(params, spec.variable, value)
        checks.extend(
            build_checks(
                args.inequality,
                source,
                swept,
                skip_on_domain_error=True,
                extra={spec.variable: int(value) if spec.variable in INTEGER_VARIABLES else value},
            )
        )
    logger.info(f"Sweep of {spec.variable} over {len(spec.points())} values: {len(checks)} checks")
    return await run_checks(checks, config)
