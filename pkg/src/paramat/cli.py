"""Command-line front end: consequence queries, audits, matrix management."""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from .audit import AuditBudget, run_table
from .formula import FormulaSet, ParseError, parse, render
from .matrix import (
    BUILTIN_NAMES,
    Matrix,
    MatrixError,
    builtin,
    format_value,
    goedel,
    load_matrix_file,
    lukasiewicz,
)
from .para import (
    LogicSpec,
    SubsetBoundError,
    logic_entails,
    maximal_consistent_subsets,
    para_entails,
)
from .semantics import classify, entails, is_consistent

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_USAGE = 2
EXIT_PARSE = 3


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def resolve_logic(selector: str, matrix_path: str | None = None) -> Matrix:
    """Resolve a logic selector to a matrix.

    Accepts a built-in name (l3, g3, k3, cl2), a parametric family member
    (ln:<n>, gn:<n>), an explicit file (file:<path>), or a bare name looked up
    as <name>.matrix in the directory given by --matrix-path or the
    PARAMAT_MATRIX_PATH environment variable.
    """
    key = selector.lower()
    if key in BUILTIN_NAMES:
        return builtin(key)
    if key.startswith(("ln:", "gn:")):
        family, _, arg = key.partition(":")
        try:
            n = int(arg)
        except ValueError:
            _fail(EXIT_USAGE, f"bad parametric selector: {selector!r}")
        try:
            m = lukasiewicz(n) if family == "ln" else goedel(n)
        except MatrixError as exc:
            _fail(EXIT_USAGE, str(exc))
        if n not in (2, 3):
            click.echo(
                f"note: {m.name} is an extension beyond the three-valued "
                "systems; audit expectations do not apply",
                err=True,
            )
        return m
    if key.startswith("file:"):
        path = selector[len("file:") :]
        try:
            return load_matrix_file(path)
        except FileNotFoundError:
            _fail(EXIT_PARSE, f"matrix file not found: {path}")
        except MatrixError as exc:
            _fail(EXIT_PARSE, f"invalid matrix file {path}: {exc}")
    search = matrix_path or os.environ.get("PARAMAT_MATRIX_PATH")
    if search:
        candidate = Path(search) / f"{selector}.matrix"
        if candidate.exists():
            try:
                return load_matrix_file(candidate)
            except MatrixError as exc:
                _fail(EXIT_PARSE, f"invalid matrix file {candidate}: {exc}")
    _fail(EXIT_USAGE, f"unknown logic selector: {selector!r}")
    raise AssertionError("unreachable")


def _parse_set(text: str) -> FormulaSet:
    try:
        return FormulaSet.from_text(text)
    except ParseError as exc:
        _fail(EXIT_PARSE, f"cannot parse premises: {exc}")
        raise AssertionError("unreachable")


def _parse_formula(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        _fail(EXIT_PARSE, f"cannot parse formula: {exc}")
        raise AssertionError("unreachable")


def _emit_json(document: dict) -> None:
    click.echo(json.dumps(document, sort_keys=True, indent=2))


_logic_option = click.option(
    "--logic", "-l", default="l3", show_default=True, help="Logic selector."
)
_para_option = click.option(
    "--para",
    "para_depth",
    type=click.IntRange(0, 2),
    default=0,
    show_default=True,
    help="Applications of the consistent-subset transform.",
)
_format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
)
_matrix_path_option = click.option(
    "--matrix-path",
    envvar="PARAMAT_MATRIX_PATH",
    default=None,
    help="Directory searched for <name>.matrix files.",
)


@click.group()
@click.version_option(package_name="paramat")
def main() -> None:
    """Many-valued matrix logics, a paraconsistent transform, and an auditor."""


@main.command("entails")
@_logic_option
@_para_option
@_format_option
@_matrix_path_option
@click.argument("gamma")
@click.argument("alpha")
def cmd_entails(logic, para_depth, fmt, matrix_path, gamma, alpha) -> None:
    """Does GAMMA (comma-separated, possibly empty) entail ALPHA?"""
    m = resolve_logic(logic, matrix_path)
    premises = _parse_set(gamma)
    conclusion = _parse_formula(alpha)
    spec = LogicSpec(m, para_depth)
    document: dict = {
        "logic": spec.name,
        "gamma": [render(f) for f in premises],
        "alpha": render(conclusion),
    }
    try:
        if para_depth == 0:
            result = entails(m, premises, conclusion)
            holds = result.holds
            if result.countermodel is not None:
                document["countermodel"] = {
                    k: format_value(v) for k, v in sorted(result.countermodel.items())
                }
        elif para_depth == 1:
            result = para_entails(m, premises, conclusion)
            holds = result.holds
            if result.witness is not None:
                document["witness"] = [render(f) for f in result.witness]
        else:
            holds = logic_entails(spec, premises, conclusion)
    except SubsetBoundError as exc:
        _fail(EXIT_USAGE, str(exc))
    document["holds"] = holds
    if fmt == "json":
        _emit_json(document)
    else:
        click.echo("holds" if holds else "fails")
        if document.get("countermodel"):
            cm = ", ".join(f"{k}={v}" for k, v in document["countermodel"].items())
            click.echo(f"countermodel: {cm}")
        if document.get("witness") is not None:
            click.echo("witness: {" + ", ".join(document["witness"]) + "}")
    sys.exit(EXIT_HOLDS if holds else EXIT_FAILS)


@main.command("classify")
@_logic_option
@_format_option
@_matrix_path_option
@click.argument("alpha")
def cmd_classify(logic, fmt, matrix_path, alpha) -> None:
    """Classify ALPHA as tautology, contradiction, or contingent."""
    m = resolve_logic(logic, matrix_path)
    f = _parse_formula(alpha)
    result = classify(m, f)
    if fmt == "json":
        _emit_json({"logic": m.name, "alpha": render(f), "classification": result.value})
    else:
        click.echo(result.value)


@main.command("consistent")
@_logic_option
@_para_option
@_format_option
@_matrix_path_option
@click.argument("gamma")
def cmd_consistent(logic, para_depth, fmt, matrix_path, gamma) -> None:
    """Is GAMMA consistent (its consequences a proper subset of all formulas)?"""
    from .para import is_para_consistent

    m = resolve_logic(logic, matrix_path)
    premises = _parse_set(gamma)
    try:
        if para_depth == 0:
            verdict = is_consistent(m, premises)
        else:
            verdict = is_para_consistent(m, premises)
    except SubsetBoundError as exc:
        _fail(EXIT_USAGE, str(exc))
    if fmt == "json":
        _emit_json(
            {
                "logic": LogicSpec(m, para_depth).name,
                "gamma": [render(f) for f in premises],
                "consistent": verdict,
            }
        )
    else:
        click.echo("consistent" if verdict else "inconsistent")
    sys.exit(EXIT_HOLDS if verdict else EXIT_FAILS)


@main.command("mss")
@_logic_option
@_format_option
@_matrix_path_option
@click.argument("gamma")
def cmd_mss(logic, fmt, matrix_path, gamma) -> None:
    """The maximal consistent subsets of GAMMA, in canonical order."""
    m = resolve_logic(logic, matrix_path)
    premises = _parse_set(gamma)
    try:
        subsets = maximal_consistent_subsets(m, premises)
    except SubsetBoundError as exc:
        _fail(EXIT_USAGE, str(exc))
    if fmt == "json":
        _emit_json(
            {
                "logic": m.name,
                "gamma": [render(f) for f in premises],
                "mss": [[render(f) for f in s] for s in subsets],
            }
        )
    else:
        click.echo("; ".join(str(s) for s in subsets))


def _budget_or_exit(samples, depth, letters, gamma_size, seed) -> AuditBudget:
    budget = AuditBudget(
        samples=samples, depth=depth, letters=letters, gamma_size=gamma_size, seed=seed
    )
    try:
        budget.validate()
    except ValueError as exc:
        _fail(EXIT_USAGE, str(exc))
    return budget


_budget_options = [
    click.option("--samples", type=int, default=500, show_default=True),
    click.option("--depth", type=int, default=3, show_default=True),
    click.option("--letters", type=int, default=3, show_default=True),
    click.option("--gamma-size", type=int, default=5, show_default=True),
    click.option("--seed", type=int, default=0, show_default=True),
]


def _with_budget(func):
    for option in reversed(_budget_options):
        func = option(func)
    return func


def _run_audit(fmt, samples, depth, letters, gamma_size, seed, text_grid: bool) -> None:
    budget = _budget_or_exit(samples, depth, letters, gamma_size, seed)
    report = run_table(budget)
    if fmt == "json":
        _emit_json(report.to_json())
    elif text_grid:
        click.echo(report.format_text())
    else:
        for (prop, col), verdict in report.verdicts.items():
            click.echo(
                f"{prop.value}/{col}: {verdict.outcome.value} ({verdict.method.value})"
            )
        for d in report.discrepancies:
            tag = "known" if d["known"] else "UNEXPLAINED"
            click.echo(
                f"discrepancy {d['cell']}: published={d['published']} "
                f"computed={d['computed']} [{tag}]"
            )
    sys.exit(EXIT_FAILS if report.unexpected_discrepancies() else EXIT_HOLDS)


@main.command("audit")
@_format_option
@_with_budget
def cmd_audit(fmt, samples, depth, letters, gamma_size, seed) -> None:
    """Audit all 16 properties across the six logics; list discrepancies."""
    _run_audit(fmt, samples, depth, letters, gamma_size, seed, text_grid=False)


@main.command("table")
@_format_option
@_with_budget
def cmd_table(fmt, samples, depth, letters, gamma_size, seed) -> None:
    """Print the 16x6 results grid."""
    _run_audit(fmt, samples, depth, letters, gamma_size, seed, text_grid=True)


@main.group("matrix")
def cmd_matrix() -> None:
    """Inspect, list, and validate matrices."""


@cmd_matrix.command("show")
@_format_option
@_matrix_path_option
@click.argument("selector")
def matrix_show(fmt, matrix_path, selector) -> None:
    """Print the truth tables of a matrix, rows in descending value order."""
    m = resolve_logic(selector, matrix_path)
    if fmt == "json":
        from .matrix import matrix_to_document

        _emit_json(matrix_to_document(m))
        return
    rows = sorted(m.values, reverse=True)
    width = max(len(format_value(v)) for v in m.values) + 2
    click.echo(f"{m.name}  values: {', '.join(format_value(v) for v in m.values)}")
    click.echo(f"designated: {', '.join(format_value(v) for v in sorted(m.designated))}")
    click.echo()
    header = " " * width + "~".rjust(width)
    for label, table in (("|", m.or_), ("&", m.and_), ("->", m.imp)):
        header += "   " + "".join(f"{label}{format_value(y)}".rjust(width) for y in rows)
    click.echo(header)
    for x in rows:
        line = format_value(x).rjust(width) + format_value(m.neg[x]).rjust(width)
        for table in (m.or_, m.and_, m.imp):
            line += "   " + "".join(
                format_value(table[(x, y)]).rjust(width) for y in rows
            )
        click.echo(line)


@cmd_matrix.command("list")
def matrix_list() -> None:
    """Name the built-in matrices and parametric families."""
    for name in BUILTIN_NAMES:
        click.echo(name)
    click.echo("ln:<n>  (n-valued, evenly spaced, designated {1})")
    click.echo("gn:<n>  (n-valued, evenly spaced, designated {1})")


@cmd_matrix.command("validate")
@click.argument("path", type=click.Path())
def matrix_validate(path) -> None:
    """Check a matrix file for structural validity."""
    try:
        m = load_matrix_file(path)
    except FileNotFoundError:
        _fail(EXIT_PARSE, f"matrix file not found: {path}")
    except MatrixError as exc:
        _fail(EXIT_PARSE, f"invalid matrix file: {exc}")
    click.echo(f"ok: {m.name} ({len(m.values)} values)")


if __name__ == "__main__":
    main()
