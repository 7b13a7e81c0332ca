"""`fraclog verify`: margins of one inequality on a family or corpus of fields."""

import argparse
import logging
from typing import Any

from fraclog.commands.common import (
    INEQUALITIES,
    add_check_arguments,
    build_checks,
    check_params_from_args,
    field_source_from_args,
    run_checks,
)
from fraclog.config import RunConfig

logger = logging.getLogger(__name__)


def add_parser(subparsers: Any, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="Evaluate inequality margins and write them as CSV",
    )
    parser.add_argument("inequality", choices=INEQUALITIES)
    add_check_arguments(parser)
    parser.set_defaults(handler=run)


async def run(args: argparse.Namespace, config: RunConfig) -> int:
    params = check_params_from_args(args, config)
    source = field_source_from_args(args, config)
    checks = build_checks(args.inequality, source, params)
    logger.debug(f"verify {args.inequality}: {len(checks)} checks from {source.kind}")
    return await run_checks(checks, config)
