"""CLI entry point for fraclog.

Usage:
    fraclog constants --n 3 --s 1
    fraclog verify lieb-loss --gaussian --n 3 --a 1.5
    fraclog verify theorem1 --corpus seed=7,count=20 --d 2 --s 0.5 --a 1
    fraclog asymptotics --s 1 --n-list 100,1000,10000
    fraclog optimal-a lieb-loss --gaussian --n 1 --field-a 2
    fraclog sweep theorem2 --vary a --values 0.25,0.5,1,2,4 --extremal --n 3 --p 2 --q 3

Exit codes: 0 all checks pass, 1 margin violation, 2 parameter-domain or configuration error.
"""

import argparse
import asyncio
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from fraclog.commands import SUBCOMMANDS
from fraclog.config import ConfigError, load_config
from fraclog.errors import DomainError, FieldFormatError, MarginViolationError

EXIT_OK = 0
EXIT_MARGIN_VIOLATION = 1
EXIT_DOMAIN_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    """The top-level parser; global flags are accepted after the subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", type=Path, default=None, help="Write CSV here instead of stdout")
    common.add_argument("--nodes", type=int, default=None, help="Radial quadrature nodes (default 512)")
    common.add_argument("--grid-n", type=int, default=None, help="Grid points per axis (default 256)")
    common.add_argument("--half-width", type=float, default=None, help="Grid half width L (default 8)")
    common.add_argument("--seed", type=int, default=None, help="Default corpus seed (default 0)")
    common.add_argument("--tolerance-scale", type=float, default=None, help="Multiplier on all tolerances (default 1)")
    common.add_argument("--config", type=Path, default=None, help="Path to fraclog.yaml (default: ./fraclog.yaml or ~/fraclog.yaml)")
    common.add_argument(
        "--log-level",
        default="WARNING",
        choices=("DEBUG", "INFO", "WARNING", "ERROR"),
        help="Log level for stderr (default WARNING)",
    )

    parser = argparse.ArgumentParser(
        prog="fraclog",
        description="Sharp constants and numerical margins of fractional and L^q log-Sobolev inequalities.",
        epilog="Environment: FRACLOG_THREADS caps worker parallelism.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in SUBCOMMANDS:
        module.add_parser(subparsers, [common])
    return parser


def overrides_from_args(args: argparse.Namespace) -> dict[str, object]:
    """Nested config overrides from global flags; unset flags are None and ignored."""
    return {
        "seed": args.seed,
        "grid": {"points_per_axis": args.grid_n, "half_width": args.half_width},
        "radial": {"node_count": args.nodes},
        "tolerance": {"scale": args.tolerance_scale},
        "output": {"csv": args.csv},
    }


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    try:
        config = load_config(args.config, overrides_from_args(args))
        return int(asyncio.run(args.handler(args, config)))
    except MarginViolationError as e:
        print(f"Margin violation: {e}", file=sys.stderr)
        return EXIT_MARGIN_VIOLATION
    except (DomainError, FieldFormatError) as e:
        print(f"Domain error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    except ConfigError as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
