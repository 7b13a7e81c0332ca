"""`fraclog asymptotics`: C(n, s) against its large-n form over a list of dimensions."""

import argparse
import math
from typing import Any

from fraclog.commands.common import make_writer, parse_number_list
from fraclog.config import RunConfig
from fraclog.constants import (
    LsiParams,
    asymptotic_constant,
    asymptotic_ratio,
    lieb_loss_rhs_constant,
    lsi_asymptotic_rhs_constant,
    lsi_rhs_constant,
    sobolev_constant,
)
from fraclog.inequalities.report import format_float
from fraclog.special import gamma_shift_ratio_log

HEADER = (
    "n",
    "s",
    "sobolev_constant",
    "asymptotic_constant",
    "ratio",
    "rhs_factor",
    "asymptotic_rhs_factor",
    "lieb_loss_factor",
    "gamma_shift_log",
    "gamma_shift_approx",
)
DEFAULT_N_LIST = "100,1000,10000,100000"


def add_parser(subparsers: Any, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "asymptotics",
        parents=parents,
        help="Tabulate C(n,s), its large-n approximant and the log-Sobolev factors",
    )
    parser.add_argument("--s", type=float, default=1.0, help="Fractional order")
    parser.add_argument("--a", type=float, default=1.0, help="Scale a of the log-Sobolev factors")
    parser.add_argument(
        "--n-list",
        default=DEFAULT_N_LIST,
        help=f"Comma separated dimensions (default {DEFAULT_N_LIST}); empty for header only",
    )
    parser.set_defaults(handler=run)


def asymptotics_row(n: int, s: float, a: float) -> list[str]:
    """One table row; the Lieb-Loss column is only filled at s = 1.

    gamma_shift_log is ln Gamma(n/2 + s) - ln Gamma(n/2 - s), the gamma ratio inside
    C(n, s), and gamma_shift_approx its large-n form 2s ln(n/2 - s).
    """
    params = LsiParams(n, s, a)
    base = 0.5 * params.n - params.s
    lieb_loss = format_float(lieb_loss_rhs_constant(params.a)) if params.s == 1.0 else ""
    return [
        str(params.n),
        format_float(params.s),
        format_float(sobolev_constant(params.n, params.s)),
        format_float(asymptotic_constant(params.n, params.s)),
        format_float(asymptotic_ratio(params.n, params.s)),
        format_float(lsi_rhs_constant(params)),
        format_float(lsi_asymptotic_rhs_constant(params)),
        lieb_loss,
        format_float(float(gamma_shift_ratio_log(base, 2.0 * params.s))),
        format_float(2.0 * params.s * math.log(base)),
    ]


async def run(args: argparse.Namespace, config: RunConfig) -> int:
    dimensions = parse_number_list(args.n_list, int)
    rows = [asymptotics_row(n, args.s, args.a) for n in dimensions]
    async with make_writer(config, HEADER) as writer:
        await writer.write(0, rows)
    return 0
