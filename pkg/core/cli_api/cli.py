#!/usr/bin/env python3
"""
Finite-Duality Command-Line Interface
Loads structure files, runs dualizations, classifications and sweeps, and
prints one report per invocation.

Exit codes: 0 success, 1 invariant or cross-check failure, 2 input or
schema error.
"""

import logging
import sys
from functools import singledispatch
from typing import Any, Callable, Dict, Optional, Tuple

import click
import coloredlogs
from rich.console import Console

from core.catdual import (
    FiniteCategory,
    RelationalMonoid,
    category_to_relmon,
    check_relmon_duality,
    classify_rescaba,
    relmon_to_category,
    relmon_to_rescaba,
    validate_relmon,
)
from core.config import load_config, with_overrides
from core.correspondence import ModalProperty, check_correspondence
from core.exceptions import ConfigurationError, DualityCheckError, DualityError, SchemaError
from core.lattice import (
    AbstractLattice,
    FiniteDistLattice,
    LatticeMap,
    canonicalize,
    dual_poset,
    dualize_hom,
    dualize_map,
    from_poset,
)
from core.monoids import (
    MonoidHom,
    OrderedMonoid,
    RelationalMonoidMorphism,
    derivation_to_monoid,
    dualize_monoid_hom,
    dualize_relational_morphism,
    monoid_to_derivation,
)
from core.operators import DualRelation, Operator, classify, dualize_operator, dualize_relation
from core.order import MonotoneMap, Poset
from core.reglang import (
    DFA,
    compile_regex,
    gamma_of_language,
    is_minimal,
    recognition_failure,
    residual_failure,
    residuation_ideal_of,
    saturation_failure,
    syntactic_monoid,
    syntactic_order,
)
from core.residuation import ResiduationAlgebra
from core.residuation import classify as classify_residuation
from core.sweeps import SUITES, run_all

from .codec import (
    build,
    encode_category,
    encode_lattice,
    encode_lattice_map,
    encode_monoid,
    encode_monotone_map,
    encode_operator,
    encode_poset,
    encode_relation,
    encode_relmon,
    encode_residuation,
    encode_set,
    encode_syntactic,
)
from .report import EXIT_FAILED, EXIT_INPUT, Report, emit
from .schema import load_structure

logger = logging.getLogger(__name__)
console = Console()

LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"
OUT_HELP = "Write the report here; always JSON, whatever --format says"


def _setup_logging(level: str) -> None:
    coloredlogs.install(level=level, stream=sys.stderr, fmt=LOG_FORMAT)


# Dualization


@singledispatch
def dual_of(obj: Any) -> Dict[str, Any]:
    raise SchemaError(
        f"Structures of type {type(obj).__name__} have no dual here",
        error_code="UNSUPPORTED_KIND",
    )


@dual_of.register
def _(p: Poset) -> Dict[str, Any]:
    return {"lattice": encode_lattice(from_poset(p))}


@dual_of.register
def _(d: FiniteDistLattice) -> Dict[str, Any]:
    return {"poset": encode_poset(dual_poset(d))}


@dual_of.register
def _(a: AbstractLattice) -> Dict[str, Any]:
    lattice, iso = canonicalize(a)
    return {
        "poset": encode_poset(dual_poset(lattice)),
        "iso": [encode_set(x) for x in iso],
    }


@dual_of.register
def _(op: Operator) -> Dict[str, Any]:
    return {"relation": encode_relation(dualize_operator(op)), "flags": classify(op).to_dict()}


@dual_of.register
def _(r: DualRelation) -> Dict[str, Any]:
    return {"operator": encode_operator(dualize_relation(r))}


@dual_of.register
def _(m: OrderedMonoid) -> Dict[str, Any]:
    r = monoid_to_derivation(m)
    return {"algebra": encode_residuation(r), "flags": classify_residuation(r).to_dict()}


@dual_of.register
def _(r: ResiduationAlgebra) -> Dict[str, Any]:
    return {"monoid": encode_monoid(derivation_to_monoid(r))}


@dual_of.register
def _(f: MonoidHom) -> Dict[str, Any]:
    return {"lattice_hom": encode_lattice_map(dualize_monoid_hom(f))}


@dual_of.register
def _(rho: RelationalMonoidMorphism) -> Dict[str, Any]:
    return {"corelational": encode_lattice_map(dualize_relational_morphism(rho))}


@dual_of.register
def _(phi: MonotoneMap) -> Dict[str, Any]:
    return {"lattice_hom": encode_lattice_map(dualize_map(phi))}


@dual_of.register
def _(f: LatticeMap) -> Dict[str, Any]:
    return {"monotone_map": encode_monotone_map(dualize_hom(f.as_hom()))}


@dual_of.register
def _(d: DFA) -> Dict[str, Any]:
    return {"syntactic_monoid": encode_syntactic(syntactic_monoid(d))}


@dual_of.register
def _(c: FiniteCategory) -> Dict[str, Any]:
    m = category_to_relmon(c)
    r = relmon_to_rescaba(m)
    return {
        "relmon": encode_relmon(m),
        "rescaba": encode_residuation(r),
        "flags": classify_rescaba(r).to_dict(),
    }


@dual_of.register
def _(m: RelationalMonoid) -> Dict[str, Any]:
    r = relmon_to_rescaba(m)
    out = {"rescaba": encode_residuation(r), "flags": classify_rescaba(r).to_dict()}
    if validate_relmon(m).is_category:
        out["category"] = encode_category(relmon_to_category(m))
    return out


# Classification


@singledispatch
def flags_of(obj: Any) -> Dict[str, Any]:
    raise SchemaError(
        f"Structures of type {type(obj).__name__} cannot be classified",
        error_code="UNSUPPORTED_KIND",
    )


@flags_of.register
def _(op: Operator) -> Dict[str, Any]:
    return {"operator": classify(op).to_dict()}


@flags_of.register
def _(r: ResiduationAlgebra) -> Dict[str, Any]:
    return {"residuation": classify_residuation(r).to_dict()}


@flags_of.register
def _(m: OrderedMonoid) -> Dict[str, Any]:
    return {"residuation": classify_residuation(monoid_to_derivation(m)).to_dict()}


@flags_of.register
def _(m: RelationalMonoid) -> Dict[str, Any]:
    relmon, rescaba = check_relmon_duality(m)
    return {"relmon": relmon.to_dict(), "rescaba": rescaba.to_dict()}


@flags_of.register
def _(c: FiniteCategory) -> Dict[str, Any]:
    return flags_of(category_to_relmon(c))


@flags_of.register
def _(d: DFA) -> Dict[str, Any]:
    s = syntactic_monoid(d)
    return {"syntactic_monoid": {"size": s.n, "minimal": is_minimal(s)}}


# Command plumbing


def _io_options(require_input: bool = True) -> Callable:
    def decorate(fn: Callable) -> Callable:
        fn = click.option("--quiet", is_flag=True, help="Print only the verdict")(fn)
        fn = click.option(
            "--format",
            "fmt",
            type=click.Choice(["json", "table"]),
            default="json",
            show_default=True,
            help="Report format",
        )(fn)
        fn = click.option("--out", type=click.Path(dir_okay=False), help=OUT_HELP)(fn)
        fn = click.option(
            "--in",
            "source",
            type=click.Path(dir_okay=False),
            required=require_input,
            help="Structure file (JSON or YAML)",
        )(fn)
        return fn

    return decorate


def _finish(
    ctx: click.Context,
    report: Report,
    body: Callable[[Report], None],
    fmt: str,
    quiet: bool,
    out: Optional[str],
) -> None:
    try:
        body(report)
    except DualityError as e:
        logger.debug(f"{report.command} failed: {e.error_code}")
        report.fail(e)
    emit(report, fmt=fmt, quiet=quiet, out=out, console=console)
    ctx.exit(report.exit_code)


def _load(report: Report, source: str) -> Tuple[Any, Any]:
    spec = load_structure(source)
    report.kind = spec.kind
    return spec, build(spec)


# Commands


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug logging")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Config file path")
@click.pass_context
def cli(ctx: click.Context, debug: bool, config_path: Optional[str]):
    """finite-duality - exact dualities of finite lattices, monoids and categories"""
    ctx.ensure_object(dict)
    try:
        config = load_config(config_path)
    except ConfigurationError as e:
        _setup_logging("DEBUG" if debug else "INFO")
        emit(Report("config").fail(e), console=console)
        ctx.exit(EXIT_INPUT)
    _setup_logging("DEBUG" if debug else config.log_level)
    ctx.obj["config"] = config


@cli.command()
@_io_options()
@click.pass_context
def dualize(ctx, source: str, out: Optional[str], fmt: str, quiet: bool):
    """Dualize a structure: posets, lattices, operators, monoids, categories and maps"""

    def body(report: Report) -> None:
        _, obj = _load(report, source)
        report.result = dual_of(obj)

    _finish(ctx, Report("dualize", source), body, fmt, quiet, out)


@cli.command("classify")
@_io_options()
@click.pass_context
def classify_command(ctx, source: str, out: Optional[str], fmt: str, quiet: bool):
    """Structural flags, each computed on both sides of its duality"""

    def body(report: Report) -> None:
        _, obj = _load(report, source)
        report.result = flags_of(obj)

    _finish(ctx, Report("classify", source), body, fmt, quiet, out)


@cli.command()
@_io_options()
@click.option(
    "--property",
    "properties",
    type=click.Choice([p.value for p in ModalProperty]),
    multiple=True,
    help="Property to check; all when omitted",
)
@click.pass_context
def correspond(ctx, source: str, out: Optional[str], fmt: str, quiet: bool, properties):
    """Check modal properties of a unary operator against its dual relation"""

    def body(report: Report) -> None:
        _, op = _load(report, source)
        if not isinstance(op, Operator):
            raise SchemaError(
                f"correspond needs an operator, got {report.kind}", error_code="UNSUPPORTED_KIND"
            )
        chosen = [ModalProperty(p) for p in properties] or list(ModalProperty)
        report.result = {"properties": [check_correspondence(op, p).to_dict() for p in chosen]}

    _finish(ctx, Report("correspond", source), body, fmt, quiet, out)


def _oracle_failures(s, word_bound: int) -> Dict[str, Any]:
    found = {
        "recognition": recognition_failure(s, word_bound),
        "residuals": residual_failure(s, word_bound),
        "saturation": saturation_failure(s, word_bound),
    }
    return {name: witness for name, witness in found.items() if witness is not None}


@cli.command()
@_io_options(require_input=False)
@click.option("--pattern", help="Regular expression instead of a structure file")
@click.option("--alphabet", default="ab", show_default=True, help="Alphabet of --pattern")
@click.option("--gamma", is_flag=True, help="Include the comultiplication of L")
@click.option("--ordered", is_flag=True, help="Use the syntactic order")
@click.option("--word-bound", type=int, help="Longest word for the word-level oracles")
@click.pass_context
def synmon(
    ctx,
    source: Optional[str],
    out: Optional[str],
    fmt: str,
    quiet: bool,
    pattern: Optional[str],
    alphabet: str,
    gamma: bool,
    ordered: bool,
    word_bound: Optional[int],
):
    """Syntactic monoid, residuation ideal and gamma(L) of a regular language"""
    def body(report: Report) -> None:
        bound = with_overrides(ctx.obj["config"], word_bound=word_bound).word_bound
        if (source is None) == (pattern is None):
            raise SchemaError("Give exactly one of --in and --pattern", error_code="INPUT_MISSING")
        if pattern is not None:
            report.kind = "regex"
            d = compile_regex(pattern, alphabet)
        else:
            _, d = _load(report, source)
            if not isinstance(d, DFA):
                raise SchemaError(
                    f"synmon needs a dfa or regex, got {report.kind}",
                    error_code="UNSUPPORTED_KIND",
                )
        s = syntactic_monoid(d)
        result: Dict[str, Any] = {"monoid": encode_syntactic(s), "minimal": is_minimal(s)}
        if ordered:
            order = syntactic_order(s)
            result["order"] = encode_poset(order)["leq"]
        ideal = residuation_ideal_of(s, ordered=ordered)
        result["ideal"] = {
            "size": ideal.size,
            "whole": ideal.is_whole,
            "elements": [encode_set(x) for x in ideal.elements],
        }
        if gamma:
            result["gamma"] = [list(pair) for pair in gamma_of_language(s, ordered).members]
        report.result = result
        failures = _oracle_failures(s, bound)
        if failures:
            raise DualityCheckError(
                "Syntactic monoid disagrees with the word-level oracles",
                error_code="WORD_ORACLE_MISMATCH",
                details={"word_bound": bound, "failures": failures},
            )

    _finish(ctx, Report("synmon", source), body, fmt, quiet, out)


@cli.command()
@click.option("--max-size", type=int, help="Size bound of the exhaustive suites")
@click.option(
    "--suite", "suites", type=click.Choice(list(SUITES)), multiple=True, help="Suite to run"
)
@click.option("--timings", is_flag=True, help="Include wall-clock seconds per suite")
@click.option("--out", type=click.Path(dir_okay=False), help=OUT_HELP)
@click.option("--format", "fmt", type=click.Choice(["json", "table"]), default="json")
@click.option("--quiet", is_flag=True, help="Print only the verdict")
@click.pass_context
def sweep(ctx, max_size: Optional[int], suites, timings: bool, out, fmt: str, quiet: bool):
    """Run the exhaustive agreement suites"""
    def body(report: Report) -> None:
        config = with_overrides(ctx.obj["config"], max_size=max_size)
        results = run_all(config, suites)
        report.result = {
            "max_size": config.max_size,
            "suites": [r.to_dict(timings=timings) for r in results],
        }
        failed = [r.name for r in results if not r.ok]
        if failed:
            report.error = {"error_code": "SWEEP_FAILED", "suites": failed}
            report.exit_code = EXIT_FAILED

    _finish(ctx, Report("sweep"), body, fmt, quiet, out)


@cli.command()
@_io_options()
@click.pass_context
def validate(ctx, source: str, out: Optional[str], fmt: str, quiet: bool):
    """Check a structure file against the schema and the laws of its kind"""

    def body(report: Report) -> None:
        _, obj = _load(report, source)
        result: Dict[str, Any] = {"valid": True}
        if isinstance(obj, RelationalMonoid):
            result["flags"] = validate_relmon(obj).to_dict()
        report.result = result

    _finish(ctx, Report("validate", source), body, fmt, quiet, out)


def main() -> None:
    cli(obj={}, prog_name="finite-duality")


if __name__ == "__main__":
    main()
