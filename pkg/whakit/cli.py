"""
Command-line driver.

Every subcommand prints one JSON object to stdout,

    {"command": name, "pass": bool, "reports": [report, ...]}

with reports sorted by suite name, and exits 0 when every identity holds,
1 when one fails and 2 on bad input. Logs go to stderr.
"""

import json
import sys
from functools import wraps
from pathlib import Path
from typing import Any, Dict, List, Optional

import click

from . import fileformat, zoo
from .config import DOUBLE_READINGS, Config
from .errors import InputError, WhakitError
from .grouplikes import Kind, check_grouplike_properties, classify_grouplike, trivial_grouplike
from .logger import LogLevel, configure_logger, get_logger
from .report import AxiomReport
from .double import double_integral_certificate
from .suites import (build_configured_double, check_entry, require_pair, run_antipode, run_cyclic,
                     run_grouplikes, run_hopfmod, run_integrals, run_modules, run_radford, run_validate)
from .wba import WeakBialgebra, check_wba, dualize
from .wha import WeakHopfAlgebra, check_wha


ZOO_PREFIX = "zoo:"


def load_source(source: str) -> WeakBialgebra:
    """A file path, or zoo:NAME for a registry entry."""
    if source.startswith(ZOO_PREFIX):
        return zoo.build(source[len(ZOO_PREFIX):])
    if not Path(source).exists():
        raise InputError(f"no such file: {source}")
    return fileformat.read(source)


def emit(command: str, reports: List[AxiomReport], result: Optional[Dict[str, Any]] = None) -> int:
    """Print the command's JSON document and return its exit code."""
    ordered = sorted(reports, key=lambda r: r.suite)
    passed = all(r.passed for r in ordered)
    document: Dict[str, Any] = {
        "command": command,
        "pass": passed,
        "reports": [r.to_dict() for r in ordered],
    }
    if result is not None:
        document["result"] = result
    click.echo(json.dumps(document, indent=2, ensure_ascii=False))
    get_logger().info("cli", "cli", "emit", "command finished", command=command, passed=passed,
                      failures=sum(len(r.failures) for r in ordered))
    return 0 if passed else 1


def guarded(command: str):
    """Map library errors and Ctrl+C onto exit codes."""
    def decorate(fn):
        @wraps(fn)
        def wrapper(*args, **kwargs):
            logger = get_logger()
            try:
                code = fn(*args, **kwargs)
            except KeyboardInterrupt:
                logger.warning("cli", "cli", command, "operation cancelled by user")
                sys.exit(130)
            except WhakitError as e:
                logger.error("cli", "cli", command, f"{type(e).__name__}: {e.message}")
                click.echo(json.dumps({"command": command, "pass": False, **e.to_dict()},
                                      indent=2, ensure_ascii=False))
                sys.exit(e.exit_code)
            sys.exit(code)
        return wrapper
    return decorate


def _config(ctx: click.Context) -> Config:
    return ctx.obj


@click.group()
@click.option('--config', type=click.Path(exists=True), help='Path to JSON config file')
@click.option('--verbose', '-v', is_flag=True, help='Log suite progress to stderr')
@click.option('--log-file', type=click.Path(), help='Append JSON-lines logs to this file')
@click.option('--search-bound', type=int, help='Coordinate bound of integral and grouplike searches')
@click.pass_context
def cli(ctx, config, verbose, log_file, search_bound):
    """
    Exact verification workbench for weak Hopf algebras.

    SOURCE arguments are structure-constant files or zoo:NAME.

    Examples:

        # All axiom suites of a zoo entry
        python -m whakit validate zoo:M2Q

        # Rebuild the antipode of a weak bialgebra from its integrals
        python -m whakit antipode algebra.json -o algebra_with_antipode.json

        # Cyclic module relations up to degree 2
        python -m whakit cyclic zoo:M2Q --max-degree 2

        # Write zoo entries to files
        python -m whakit zoo Z2 M2Q -o examples_out
    """
    config_obj = Config(config).override(search_bound=search_bound, log_file=log_file)
    level = LogLevel.DEBUG if verbose else LogLevel.parse(config_obj.get("log_level"))
    configure_logger(console=True, file_path=config_obj.get("log_file"), min_level=level)
    ctx.obj = config_obj


@cli.command()
@click.argument('source')
@click.pass_context
@guarded("validate")
def validate(ctx, source):
    """Weak bialgebra axioms, and the weak Hopf suites when an antipode is given."""
    return emit("validate", run_validate(load_source(source), _config(ctx)))


@cli.command()
@click.argument('source')
@click.pass_context
@guarded("integrals")
def integrals(ctx, source):
    """Integral spaces, a dual pair of left integrals and the antipode presentations."""
    return emit("integrals", run_integrals(load_source(source), _config(ctx)))


@cli.command()
@click.argument('source')
@click.option('--output', '-o', type=click.Path(), help='Write the weak Hopf algebra here')
@click.pass_context
@guarded("antipode")
def antipode(ctx, source, output):
    """Build the antipode from a non-degenerate left integral."""
    A = load_source(source)
    given = A.S if isinstance(A, WeakHopfAlgebra) else None
    base = A.base if isinstance(A, WeakHopfAlgebra) else A
    W, reports = run_antipode(base, _config(ctx))
    if W is not None and given is not None:
        uniqueness = AxiomReport("antipode-uniqueness")
        uniqueness.check_equal("rebuilt antipode equals the given one", "uniqueness of the antipode",
                               W.S, given, [A.dim])
        reports.append(uniqueness)
    if W is not None and output:
        fileformat.write(W, output)
    return emit("antipode", reports)


@cli.command(name="dualize")
@click.argument('source')
@click.option('--output', '-o', type=click.Path(), help='Write the dual here')
@click.pass_context
@guarded("dualize")
def dualize_command(ctx, source, output):
    """The dual weak bialgebra (weak Hopf algebra) with transposed structure maps."""
    dual = dualize(load_source(source))
    reports = [check_wba(dual)]
    if isinstance(dual, WeakHopfAlgebra):
        reports.append(check_wha(dual))
    if output:
        fileformat.write(dual, output)
    return emit("dualize", reports)


@cli.command()
@click.argument('source')
@click.option('--element', type=click.Path(exists=True), help='Element file to classify')
@click.option('--trivial-from', type=click.Path(exists=True), help='Element x_L of A^L to build x S(x^-1) from')
@click.option('--dual', is_flag=True, help='Classify the element in the dual')
@click.pass_context
@guarded("grouplike")
def grouplike(ctx, source, element, trivial_from, dual):
    """Classify a grouplike element, or build a trivial one from A^L; without options run the suites."""
    A = load_source(source)
    if element and trivial_from:
        raise InputError("give --element or --trivial-from, not both")
    if not element and not trivial_from:
        return emit("grouplike", run_grouplikes(A, _config(ctx)))
    target = dualize(A) if dual else A
    if trivial_from:
        if not isinstance(target, WeakHopfAlgebra):
            raise InputError("trivial grouplikes need an antipode")
        g = trivial_grouplike(target, fileformat.read_element(trivial_from, target), Kind.RIGHT)
    else:
        g = fileformat.read_element(element, target)
    witness = classify_grouplike(target, g)
    report = AxiomReport("grouplike")
    report.check_true("element is grouplike", "grouplike elements", witness is not None,
                      detail=witness.kind.value if witness is not None else "neither coproduct identity holds")
    reports = [report]
    if witness is not None and isinstance(target, WeakHopfAlgebra):
        reports.append(check_grouplike_properties(target, [witness]))
    result = witness.to_dict(target.field) if witness is not None else None
    return emit("grouplike", reports, result)


@cli.command()
@click.argument('source')
@click.pass_context
@guarded("modules")
def modules(ctx, source):
    """Unit and regular modules: monoidal structure, rigidity, classes, invertibility, radical."""
    return emit("modules", run_modules(load_source(source), _config(ctx)))


@cli.command()
@click.argument('source')
@click.pass_context
@guarded("hopfmod")
def hopfmod(ctx, source):
    """Canonical weak Hopf modules, the structure theorem and freeness certificates."""
    return emit("hopfmod", run_hopfmod(load_source(source), _config(ctx)))


@cli.command()
@click.argument('source')
@click.option('--max-order', type=int, help='Largest exponent of the antipode order search')
@click.pass_context
@guarded("radford")
def radford(ctx, source, max_order):
    """Nakayama automorphism, Radford formula, antipode order and gauge checks."""
    config = _config(ctx).override(max_order=max_order)
    return emit("radford", run_radford(load_source(source), config))


@cli.command()
@click.argument('source')
@click.option('--output', '-o', type=click.Path(), help='Write the double here')
@click.option('--double-reading', type=click.Choice(DOUBLE_READINGS), help='Multiplication reading of the double')
@click.pass_context
@guarded("double")
def double(ctx, source, output, double_reading):
    """The Drinfeld double as a quotient of A (x) A-hat."""
    config = _config(ctx).override(double_reading=double_reading)
    A = load_source(source)
    D = build_configured_double(A, config)
    reports = [D.report, double_integral_certificate(D, require_pair(A, config))]
    if output:
        fileformat.write(D.algebra, output)
    return emit("double", reports, {"dim": D.dim, "reading": D.reading.value})


@cli.command()
@click.argument('source')
@click.option('--sigma', type=click.Path(exists=True), help='Grouplike of the dual (element file)')
@click.option('--s', 's_file', type=click.Path(exists=True), help='Grouplike of A (element file)')
@click.option('--max-degree', type=int, help='Highest cochain degree checked')
@click.pass_context
@guarded("cyclic")
def cyclic(ctx, source, sigma, s_file, max_degree):
    """Modular pair and the relations of the cyclic module up to the maximal degree."""
    config = _config(ctx).override(max_degree=max_degree)
    A = load_source(source)
    sigma_v = fileformat.read_element(sigma, A) if sigma else None
    s_v = fileformat.read_element(s_file, A) if s_file else None
    return emit("cyclic", run_cyclic(A, config, sigma_v, s_v))


@cli.command(name="zoo")
@click.argument('names', nargs=-1)
@click.option('--output', '-o', 'out_dir', type=click.Path(file_okay=False), help='Directory for the files')
@click.option('--list', 'list_entries', is_flag=True, help='List the registry')
@click.option('--check', is_flag=True, help='Run each entry\'s manifest')
@click.pass_context
@guarded("zoo")
def zoo_command(ctx, names, out_dir, list_entries, check):
    """Generate zoo entries to files, list them, or check their manifests."""
    if list_entries:
        entries = [{"name": e.name, "params": e.params, "manifest": list(e.manifest), "limits": dict(e.limits),
                    "description": e.description}
                   for e in zoo.ZOO.values()]
        return emit("zoo", [], {"entries": entries})
    if not names:
        raise InputError("name at least one zoo entry, or use --list")
    reports: List[AxiomReport] = []
    written = []
    for name in names:
        entry = zoo.get_entry(name)
        A = entry.build()
        if out_dir:
            Path(out_dir).mkdir(parents=True, exist_ok=True)
            path = Path(out_dir) / f"{name}.json"
            fileformat.write(A, path)
            written.append(str(path))
        if check:
            for report in check_entry(entry, _config(ctx), A):
                report.suite = f"{name}:{report.suite}"
                reports.append(report)
    return emit("zoo", reports, {"written": written})


def main() -> None:
    cli(prog_name="whakit")


if __name__ == "__main__":
    main()
