"""CLI subcommands; each module registers a parser and an async handler."""

from fraclog.commands import asymptotics, constants, optimal_a, sweep, verify

SUBCOMMANDS = (constants, verify, asymptotics, optimal_a, sweep)

__all__ = ["SUBCOMMANDS"]
