"""`fraclog optimal-a`: closed-form optimal scale with a numeric and bracket cross-check."""

import argparse
import asyncio
import logging
from collections.abc import Callable
from typing import Any

from fraclog.commands.common import (
    add_check_arguments,
    check_params_from_args,
    field_recipes,
    field_source_from_args,
    make_writer,
)
from fraclog.config import RunConfig
from fraclog.constants import minimize_margin_over_a, optimal_a_lieb_loss, optimal_a_theorem1
from fraclog.errors import MarginViolationError
from fraclog.fields import Field, l2_norm_sq
from fraclog.inequalities import MarginReport, TolerancePolicy, lieb_loss_margin, theorem1_margin
from fraclog.inequalities.margins import energy_sq, field_dimension
from fraclog.inequalities.report import DENOMINATOR_GUARD, format_float, format_params

logger = logging.getLogger(__name__)

HEADER = ("inequality_id", "params", "label", "a", "margin", "relative_margin")
BRACKET_RATIO = 1.5
BRACKET_STEPS = range(-4, 5)


def add_parser(subparsers: Any, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "optimal-a",
        parents=parents,
        help="Optimal scale a for the log-Sobolev inequalities at a fixed field",
    )
    parser.add_argument("inequality", choices=("lieb-loss", "theorem1"))
    add_check_arguments(parser)
    parser.set_defaults(handler=run)


def optimal_scale(inequality: str, field_: Field, s: float) -> tuple[float, Callable[[float], MarginReport]]:
    """Closed-form a* and the margin as a function of a.

    Raises:
        DomainError: For the zero field or s outside (0, n/2)
    """
    n = field_dimension(field_)
    l2sq = l2_norm_sq(field_)
    if inequality == "lieb-loss":
        a_star = optimal_a_lieb_loss(l2sq, energy_sq(field_, 1.0), n)
        return a_star, lambda a: lieb_loss_margin(field_, a)
    a_star = optimal_a_theorem1(l2sq, energy_sq(field_, s), n, s)
    return a_star, lambda a: theorem1_margin(field_, s, a)


def scan(
    inequality: str, field_: Field, s: float, policy: TolerancePolicy
) -> tuple[list[tuple[str, float, MarginReport]], list[float]]:
    """Rows (label, a, report) and the relative deficits of bracket points beating a*."""
    a_star, margin_at = optimal_scale(inequality, field_, s)
    star = margin_at(a_star)
    numeric = minimize_margin_over_a(lambda a: margin_at(a).margin, a_star)
    rows = [("closed-form", a_star, star), ("numeric", numeric, margin_at(numeric))]
    deficits: list[float] = []
    for k in BRACKET_STEPS:
        a = a_star * BRACKET_RATIO**k
        report = margin_at(a)
        rows.append((f"bracket{k:+d}", a, report))
        if report.margin < star.margin - policy.allowance(star):
            deficits.append((report.margin - star.margin) / max(abs(star.rhs), DENOMINATOR_GUARD))
    return rows, deficits


async def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Write the a* table for every selected field.

    Raises:
        DomainError: For the zero field or invalid parameters
        MarginViolationError: If a bracket point has a smaller margin than a*
    """
    params = check_params_from_args(args, config)
    source = field_source_from_args(args, config)
    policy = config.tolerance.policy()
    deficits: list[float] = []
    async with make_writer(config, HEADER) as writer:
        for sequence, recipe in enumerate(field_recipes(args.inequality, source, params)):
            field_ = await asyncio.to_thread(recipe.build)
            rows, found = await asyncio.to_thread(scan, args.inequality, field_, params.s, policy)
            deficits.extend(found)
            await writer.write(
                sequence,
                [
                    [
                        args.inequality,
                        format_params({**report.params, **recipe.params}),
                        label,
                        format_float(a),
                        format_float(report.margin),
                        format_float(report.relative_margin),
                    ]
                    for label, a, report in rows
                ],
            )
    if deficits:
        raise MarginViolationError(len(deficits), min(deficits))
    logger.info(f"optimal-a {args.inequality}: closed form confirmed")
    return 0
