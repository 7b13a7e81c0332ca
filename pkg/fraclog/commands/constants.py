"""`fraclog constants`: sharp constants for one parameter set."""

import argparse
from typing import Any

from fraclog.commands.common import make_writer
from fraclog.config import RunConfig
from fraclog.constants import (
    LsiParams,
    asymptotic_constant,
    asymptotic_ratio,
    gns_constant,
    gns_exponents,
    lsi_rhs_constant,
    sobolev_constant,
)
from fraclog.errors import DomainError
from fraclog.inequalities.report import format_float

FRACTIONAL_HEADER = (
    "n",
    "s",
    "a",
    "sobolev_constant",
    "asymptotic_constant",
    "asymptotic_ratio",
    "lsi_rhs_constant",
)
GNS_HEADER = ("n", "p", "q", "r", "theta", "delta", "gns_constant")


def add_parser(subparsers: Any, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "constants",
        parents=parents,
        help="Evaluate C(n,s) or the GNS constant S(n,p,q)",
        description="Give --n with --s for the fractional Sobolev family, "
        "or --n with --p and --q for the GNS family.",
    )
    parser.add_argument("--n", type=int, required=True, help="Dimension")
    parser.add_argument("--s", type=float, help="Fractional order, 0 < s < n/2")
    parser.add_argument("--a", type=float, default=1.0, help="Scale for the log-Sobolev factor")
    parser.add_argument("--p", type=float, help="GNS gradient exponent, 1 < p < n")
    parser.add_argument("--q", type=float, help="GNS exponent, p < q <= p(n-1)/(n-p)")
    parser.set_defaults(handler=run)


def fractional_row(n: int, s: float, a: float) -> list[str]:
    params = LsiParams(n, s, a)
    return [
        str(params.n),
        format_float(params.s),
        format_float(params.a),
        format_float(sobolev_constant(params.n, params.s)),
        format_float(asymptotic_constant(params.n, params.s)),
        format_float(asymptotic_ratio(params.n, params.s)),
        format_float(lsi_rhs_constant(params)),
    ]


def gns_row(n: int, p: float, q: float) -> list[str]:
    params = gns_exponents(n, p, q)
    return [
        str(params.n),
        format_float(params.p),
        format_float(params.q),
        format_float(params.r),
        format_float(params.theta),
        format_float(params.delta),
        format_float(gns_constant(params.n, params.p, params.q)),
    ]


async def run(args: argparse.Namespace, config: RunConfig) -> int:
    """Print one row of constants.

    Raises:
        DomainError: On a mixed or incomplete parameter set, or violated hypotheses
    """
    fractional = args.s is not None
    gns = args.p is not None or args.q is not None
    if fractional == gns or (gns and (args.p is None or args.q is None)):
        raise DomainError("give either --s, or both --p and --q")

    if fractional:
        header, row = FRACTIONAL_HEADER, fractional_row(args.n, args.s, args.a)
    else:
        header, row = GNS_HEADER, gns_row(args.n, args.p, args.q)
    async with make_writer(config, header) as writer:
        await writer.write(0, [row])
    return 0
