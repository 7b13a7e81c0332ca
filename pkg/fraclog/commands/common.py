"""Shared pieces of the subcommands: parameters, field recipes and the run loop."""

import argparse
import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Literal

import numpy as np

from fraclog.config import RunConfig
from fraclog.errors import DomainError
from fraclog.extremals import (
    aubin_talenti,
    gaussian,
    gns_extremal,
    indicator_field,
    random_mixture,
    random_radial,
)
from fraclog.fields import Field, GridField, RadialProfile, build_radial, load_field, make_field
from fraclog.inequalities import (
    CSV_HEADER,
    MarginReport,
    entropy_interpolation_check,
    gns_margin,
    lieb_loss_margin,
    log_linear_bound_check,
    sobolev_margin,
    sobolev_margin_radial_s1,
    theorem1_chain,
    theorem1_margin,
    theorem2_chain,
    theorem2_margin,
)
from fraclog.inequalities.margins import Theorem2Form
from fraclog.output import Check, ReportWriter, VerificationTally, evaluate_all

logger = logging.getLogger(__name__)

INEQUALITIES = (
    "lieb-loss",
    "theorem1",
    "sobolev",
    "sobolev-radial",
    "gns",
    "theorem2",
    "interpolation",
    "logbound",
    "theorem1-chain",
    "theorem2-chain",
)
RADIAL_ONLY = frozenset({"sobolev-radial", "gns", "theorem2", "theorem2-chain"})
GRID_ONLY = frozenset({"sobolev"})

SourceKind = Literal["gaussian", "extremal", "corpus", "zero", "indicator", "load", "none"]

DEFAULT_GRID_DIM = 2
DEFAULT_RADIAL_DIM = 3
DEFAULT_CORPUS_COMPONENTS = 3


@dataclass(frozen=True)
class CheckParams:
    """Every parameter an inequality check can take, with CLI defaults."""

    n: int | None = None
    d: int | None = None
    s: float = 0.5
    a: float = 1.0
    p: float = 2.0
    q: float = 3.0
    eps: float = 1.0
    x: float = 2.0
    b: float = math.e
    c: float = 1.0
    field_a: float | None = None
    form: Theorem2Form = "proof"
    grid_points: int = 256
    half_width: float = 8.0
    node_count: int = 512

    @property
    def grid_dim(self) -> int:
        return self.d if self.d is not None else self.n if self.n is not None else DEFAULT_GRID_DIM

    @property
    def radial_dim(self) -> int:
        return self.n if self.n is not None else self.d if self.d is not None else DEFAULT_RADIAL_DIM


@dataclass(frozen=True)
class FieldSource:
    """Which test fields a check runs on."""

    kind: SourceKind
    seed: int = 0
    count: int = 1
    components: int = DEFAULT_CORPUS_COMPONENTS
    cells: int = 4
    path: Path | None = None
    grid: bool = False


@dataclass(frozen=True)
class FieldRecipe:
    """A lazily built field and the parameters that describe it in the CSV."""

    params: dict[str, Any]
    build: Callable[[], Field] = field(repr=False)


def parse_key_values(text: str) -> dict[str, str]:
    """Parse 'k1=v1,k2=v2'.

    Raises:
        DomainError: On an item without '='
    """
    pairs: dict[str, str] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise DomainError("expected key=value items separated by commas", item=item)
        pairs[key.strip()] = value.strip()
    return pairs


def parse_corpus(text: str, default_seed: int) -> FieldSource:
    """Corpus source from 'seed=7,count=20[,components=3]'.

    Raises:
        DomainError: On unknown keys or non-integer values
    """
    values = parse_key_values(text)
    unknown = set(values) - {"seed", "count", "components"}
    if unknown:
        raise DomainError("unknown corpus keys", keys=sorted(unknown))
    try:
        numbers = {key: int(value) for key, value in values.items()}
    except ValueError as e:
        raise DomainError("corpus values must be integers", corpus=text) from e
    return FieldSource(
        kind="corpus",
        seed=numbers.get("seed", default_seed),
        count=numbers.get("count", 1),
        components=numbers.get("components", DEFAULT_CORPUS_COMPONENTS),
    )


def parse_number_list(text: str, cast: Callable[[str], Any] = float) -> list[Any]:
    """Comma separated numbers; the empty string gives an empty list."""
    try:
        return [cast(item) for item in (part.strip() for part in text.split(",")) if item]
    except ValueError as e:
        raise DomainError("expected a comma separated list of numbers", value=text) from e


def _wants_grid(inequality: str, source: FieldSource, params: CheckParams) -> bool:
    if inequality in RADIAL_ONLY:
        return False
    if inequality in GRID_ONLY or source.grid:
        return True
    if source.kind in ("corpus", "zero", "indicator"):
        return True
    # Radial profiles only carry the s = 1 energy.
    return inequality.startswith("theorem1") and params.s != 1.0


def field_recipes(inequality: str, source: FieldSource, params: CheckParams) -> list[FieldRecipe]:
    """The fields a check runs on, built lazily so domain errors surface per check."""
    if inequality == "logbound" or source.kind == "none":
        return []
    grid = _wants_grid(inequality, source, params)
    d, n = params.grid_dim, params.radial_dim
    L, N, nodes = params.half_width, params.grid_points, params.node_count
    scale = params.field_a if params.field_a is not None else params.a

    if source.kind == "load":
        assert source.path is not None
        path = source.path
        return [FieldRecipe({"field": "file", "path": str(path)}, lambda: load_field(path))]

    if source.kind == "zero":
        if grid:
            return [FieldRecipe({"field": "zero"}, lambda: make_field(d, L, N, np.zeros((N,) * d)))]
        return [FieldRecipe({"field": "zero"}, lambda: build_radial(np.zeros_like, np.zeros_like, n, nodes))]

    if source.kind == "indicator":
        return [
            FieldRecipe(
                {"field": "indicator", "cells": source.cells},
                lambda: indicator_field(d, L, N, source.cells),
            )
        ]

    if source.kind == "corpus":
        recipes = []
        for i in range(source.count):
            seed = source.seed + i
            if grid:
                build = _mixture_builder(seed, d, source.components, L, N)
            else:
                build = _radial_builder(seed, n, source.components, nodes)
            recipes.append(FieldRecipe({"field": "corpus", "seed": seed}, build))
        return recipes

    if source.kind == "extremal" and inequality in ("sobolev", "sobolev-radial"):
        order = params.s if inequality == "sobolev" else 1.0
        representation = "grid" if grid else "radial"
        dim = d if grid else n
        return [
            FieldRecipe(
                {"field": "aubin-talenti", "c": params.c},
                lambda: aubin_talenti(
                    dim, order, params.c, representation,
                    node_count=nodes, half_width=L, points_per_axis=N,
                ),
            )
        ]
    if source.kind == "extremal" and inequality in RADIAL_ONLY:
        return [
            FieldRecipe(
                {"field": "gns-extremal", "c": params.c},
                lambda: gns_extremal(n, params.p, params.q, params.c, node_count=nodes),
            )
        ]

    # Gaussian, which is also the log-Sobolev extremal.
    representation = "grid" if grid else "radial"
    dim = d if grid else n
    return [
        FieldRecipe(
            {"field": "gaussian", "field_a": scale},
            lambda: gaussian(
                dim, scale, representation,
                node_count=nodes, half_width=L, points_per_axis=N,
            )[0],
        )
    ]


def _mixture_builder(seed: int, d: int, components: int, L: float, N: int) -> Callable[[], Field]:
    return lambda: random_mixture(seed, d, components, L, N)


def _radial_builder(seed: int, n: int, components: int, nodes: int) -> Callable[[], Field]:
    return lambda: random_radial(seed, n, components, nodes)


def _radial(field_: Field, inequality: str) -> RadialProfile:
    if not isinstance(field_, RadialProfile):
        raise DomainError(f"{inequality} needs a radial profile")
    return field_


def _grid(field_: Field, inequality: str) -> GridField:
    if not isinstance(field_, GridField):
        raise DomainError(f"{inequality} needs a grid field")
    return field_


Evaluator = Callable[[Field], MarginReport | list[MarginReport]]


def evaluator(inequality: str, params: CheckParams) -> Evaluator:
    """Map an inequality id to the function evaluating it on one field.

    Raises:
        DomainError: On an unknown inequality id
    """
    p = params
    table: dict[str, Evaluator] = {
        "lieb-loss": lambda f: lieb_loss_margin(f, p.a),
        "theorem1": lambda f: theorem1_margin(f, p.s, p.a),
        "theorem1-chain": lambda f: theorem1_chain(f, p.s, p.a).links(),
        "sobolev": lambda f: sobolev_margin(_grid(f, "sobolev"), p.s),
        "sobolev-radial": lambda f: sobolev_margin_radial_s1(_radial(f, "sobolev-radial")),
        "gns": lambda f: gns_margin(_radial(f, "gns"), p.p, p.q),
        "theorem2": lambda f: theorem2_margin(_radial(f, "theorem2"), p.p, p.q, p.a, p.form),
        "theorem2-chain": lambda f: theorem2_chain(_radial(f, "theorem2-chain"), p.p, p.q, p.a).links(),
        "interpolation": lambda f: entropy_interpolation_check(f, p.q, p.eps),
    }
    if inequality not in table:
        raise DomainError("unknown inequality id", inequality=inequality, known=list(INEQUALITIES))
    return table[inequality]


def build_checks(
    inequality: str,
    source: FieldSource,
    params: CheckParams,
    *,
    skip_on_domain_error: bool = False,
    extra: dict[str, Any] | None = None,
) -> list[Check]:
    """One Check per field recipe (or a single one for the scalar log bound)."""
    tags = extra or {}
    if inequality == "logbound":
        return [
            Check(
                inequality,
                lambda: log_linear_bound_check(params.x, params.b),
                params=tags,
                skip_on_domain_error=skip_on_domain_error,
            )
        ]
    evaluate = evaluator(inequality, params)
    return [
        Check(
            inequality,
            _bind(evaluate, recipe),
            params={**recipe.params, **tags},
            skip_on_domain_error=skip_on_domain_error,
        )
        for recipe in field_recipes(inequality, source, params)
    ]


def _bind(evaluate: Evaluator, recipe: FieldRecipe) -> Callable[[], MarginReport | list[MarginReport]]:
    return lambda: evaluate(recipe.build())


def make_writer(config: RunConfig, header: Sequence[str] = CSV_HEADER) -> ReportWriter:
    return ReportWriter(
        header,
        config.output.csv,
        batch_size=config.output.batch_size,
        batch_timeout=config.output.batch_timeout,
    )


async def run_checks(checks: Sequence[Check], config: RunConfig) -> int:
    """Evaluate, write the CSV and return exit code 0.

    Raises:
        MarginViolationError: If any margin fell below tolerance
        DomainError: From checks that do not skip domain errors
    """
    tally = VerificationTally(config.tolerance.policy())
    async with make_writer(config) as writer:
        await evaluate_all(checks, writer, tally, threads=config.output.threads)
    await tally.raise_for_failures()
    return 0


def check_params_from_args(args: argparse.Namespace, config: RunConfig) -> CheckParams:
    """Collect check parameters from parsed flags, with resolution from the config."""
    values = {
        name: getattr(args, name)
        for name in ("n", "d", "s", "a", "p", "q", "eps", "x", "b", "c", "field_a", "form")
        if getattr(args, name, None) is not None
    }
    return CheckParams(
        grid_points=config.grid.points_per_axis,
        half_width=config.grid.half_width,
        node_count=config.radial.node_count,
        **values,
    )


def field_source_from_args(args: argparse.Namespace, config: RunConfig) -> FieldSource:
    """Pick the field source from the mutually exclusive source flags."""
    if getattr(args, "corpus", None) is not None:
        source = parse_corpus(args.corpus, config.seed)
        return FieldSource(
            kind="corpus", seed=source.seed, count=source.count,
            components=source.components, grid=args.grid,
        )
    if getattr(args, "load", None) is not None:
        return FieldSource(kind="load", path=args.load)
    if getattr(args, "indicator", None) is not None:
        return FieldSource(kind="indicator", cells=args.indicator, grid=True)
    if getattr(args, "zero", False):
        return FieldSource(kind="zero", grid=args.grid)
    if getattr(args, "extremal", False):
        return FieldSource(kind="extremal", grid=args.grid)
    return FieldSource(kind="gaussian", grid=args.grid)


def add_check_arguments(parser: argparse.ArgumentParser) -> None:
    """Field source and parameter flags shared by verify, optimal-a and sweep."""
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--gaussian", action="store_true", help="Gaussian exp(-pi|x|^2/(2 a^2)) (default)")
    source.add_argument("--extremal", action="store_true", help="Equality case of the chosen inequality")
    source.add_argument("--corpus", metavar="SPEC", help="Seeded random corpus, e.g. seed=7,count=20")
    source.add_argument("--zero", action="store_true", help="The zero field")
    source.add_argument("--indicator", type=int, metavar="CELLS", help="Centred cube indicator on the grid")
    source.add_argument("--load", type=Path, metavar="PATH", help="Grid field saved with save_field")
    parser.add_argument("--grid", action="store_true", help="Use the periodic grid representation")
    parser.add_argument("--n", type=int, help="Ambient dimension of radial profiles")
    parser.add_argument("--d", type=int, help="Grid dimension (1 to 3)")
    parser.add_argument("--s", type=float, help="Fractional order")
    parser.add_argument("--a", type=float, help="Scale a of the log-Sobolev inequality")
    parser.add_argument("--p", type=float, help="GNS gradient exponent")
    parser.add_argument("--q", type=float, help="GNS / entropy exponent")
    parser.add_argument("--eps", type=float, help="Interpolation exponent eps")
    parser.add_argument("--x", type=float, help="x of the log-linear bound")
    parser.add_argument("--b", type=float, help="b of the log-linear bound")
    parser.add_argument("--c", type=float, help="Extremal family parameter c")
    parser.add_argument("--field-a", type=float, help="Gaussian scale when it differs from --a")
    parser.add_argument("--form", choices=("proof", "stated"), help="Theorem 2 right-hand side form")
