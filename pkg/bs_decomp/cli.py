"""
Command-line interface for bs-decomp.

This module provides the bs-decomp command: Betti tables of complete
intersections, greedy and recursive decompositions, remainders and bounds,
codimension four closed forms, conjecture and stability checks, and the
exhaustive sweep, with text or JSON output.
"""

import logging
import warnings
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn

from . import reporting
from .bs_decomposition import decompose
from .codim4 import codim4_case, codim4_closed, codim4_ratios, codim4_symbolic, engine_check
from .config import EngineConfig, load_config
from .errors import BettiError, BettiWarning
from .koszul import DegreeTuple, betti_ci
from .recursive_decomposition import (
    conjecture_phase2,
    new_algorithm,
    ratios,
    remainders,
    stability_bound,
    stability_report,
)
from .sweep import SweepParams, iter_bases, run_sweep, write_jsonl
from .utils import parse_tuple, parse_tuple_and_next, setup_logging

logger = logging.getLogger(__name__)

EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_COUNTEREXAMPLE = 3

app = typer.Typer(
    name="bs-decomp",
    help="Exact Boij-Soederberg decompositions of complete intersection Betti diagrams",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)

DEGREES_HELP = "Degrees, comma- or space-separated (2,3,4 or 2 3 4)"
NEXT_HELP = "Base degrees followed by the appended degree (2,3,4 13)"


def _config(ctx: typer.Context) -> EngineConfig:
    if ctx.obj is None:
        ctx.obj = load_config()
    return ctx.obj


def _usage_error(message: str) -> None:
    err_console.print(message, markup=False, highlight=False)
    raise typer.Exit(code=EXIT_USAGE)


def _parse(parts: List[str]) -> DegreeTuple:
    try:
        a, reordered = parse_tuple(parts)
    except ValueError as e:
        _usage_error(f"{type(e).__name__}: {e}")
    if reordered:
        err_console.print(f"Note: degrees sorted to {a}", markup=False, highlight=False)
    return a


def _parse_with_next(parts: List[str]):
    try:
        a, a_next, reordered = parse_tuple_and_next(parts)
    except ValueError as e:
        _usage_error(f"{type(e).__name__}: {e}")
    if reordered:
        err_console.print(f"Note: degrees sorted to {a}", markup=False, highlight=False)
    return a, a_next


@contextmanager
def _computation() -> Iterator[None]:
    """Report BettiError as "<Name>: <message>" and BettiWarning as a notice, both on stderr."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BettiWarning)
        try:
            yield
        except BettiError as e:
            err_console.print(f"{type(e).__name__}: {e}", markup=False, highlight=False)
            raise typer.Exit(code=EXIT_ERROR)
        finally:
            for w in caught:
                if issubclass(w.category, BettiWarning):
                    err_console.print(
                        f"Warning: {w.category.__name__}: {w.message}", markup=False, highlight=False
                    )


def _emit_json(ctx: typer.Context, command: str, payload: Any, args: Dict[str, Any]) -> None:
    document = reporting.make_document(command, payload, args)
    indent = int(_config(ctx).get("json_indent", 2))
    typer.echo(reporting.dumps(document, indent=indent))


@app.callback()
def main(
    ctx: typer.Context,
    config_file: Optional[str] = typer.Option(
        None,
        "--config", "-c",
        help="Path to configuration file"
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose", "-v",
        help="Log progress at INFO level"
    ),
    debug: bool = typer.Option(
        False,
        "--debug",
        help="Log every elimination step"
    ),
):
    """Exact Boij-Soederberg decompositions of complete intersection Betti diagrams"""
    try:
        config = load_config(config_file)
    except (FileNotFoundError, ValueError) as e:
        _usage_error(f"Error loading configuration: {e}")

    if debug:
        config.set("log_level", "DEBUG")
    elif verbose:
        config.set("log_level", "INFO")
    setup_logging(config)
    ctx.obj = config


@app.command("betti")
def betti_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=DEGREES_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Print the Betti table of a complete intersection"""
    a = _parse(degrees)
    with _computation():
        D = betti_ci(a)
    if json_output:
        _emit_json(ctx, "betti", reporting.encode_diagram(D), {"degrees": list(a.degrees)})
    else:
        typer.echo(reporting.render_betti_table(D))


@app.command("decompose")
def decompose_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=DEGREES_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
    elim_table: bool = typer.Option(
        False, "--elim-table", help="Also print the elimination table and order"
    ),
):
    """Greedy decomposition of a complete intersection Betti diagram"""
    a = _parse(degrees)
    with _computation():
        D = betti_ci(a)
        dec, record = decompose(D)

    if json_output:
        payload = {"decomposition": reporting.encode_decomposition(dec)}
        if elim_table:
            payload["elimination"] = reporting.encode_record(record)
        _emit_json(ctx, "decompose", payload, {"degrees": list(a.degrees), "elim_table": elim_table})
        return

    typer.echo(reporting.render_terms(dec.terms))
    if elim_table:
        typer.echo("")
        typer.echo(reporting.render_elimination_table(record, D.columns))
        typer.echo("")
        for step, positions in enumerate(record.display_order(), start=1):
            shown = " ".join(f"({i},{row})" for i, row in positions)
            typer.echo(f"step {step}: {shown}")
        if record.has_mass_elimination():
            typer.echo(f"mass elimination at steps {record.mass_steps()}")


@app.command("recursive")
def recursive_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=NEXT_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Decompose a + a_next with the three-phase recursive algorithm"""
    a, a_next = _parse_with_next(degrees)
    with _computation():
        report = new_algorithm(a, a_next)

    if json_output:
        _emit_json(
            ctx, "recursive", reporting.encode_recursive(report),
            {"degrees": list(a.degrees), "a_next": a_next},
        )
        return

    typer.echo(reporting.render_terms(report.terms))
    console.print(reporting.terms_table(
        report.terms, f"Recursive decomposition of {report.extended}", report.targets
    ))
    m, phase2_end = report.phase_boundaries
    console.print(reporting.flags_table({
        "Phases": f"1..{m} | {m + 1}..{phase2_end} | {phase2_end + 1}..{len(report.terms)}",
        "Stability bound": str(report.stability_bound),
        "Zero coefficients": str(report.zero_indices),
        "Error diagram zero": report.error_diagram.is_zero(),
        "Chain": report.is_chain,
        "All positive": report.all_positive,
        "Agrees with greedy": report.agrees_with_standard,
        "Compatible order": report.compatible_order,
        "Symmetric": report.symmetric,
        "Palindromic": report.palindromic,
    }))


@app.command("bound")
def bound_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=DEGREES_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Remainders, ratios and the stability bound of a base tuple"""
    a = _parse(degrees)
    with _computation():
        r = remainders(a)
        q = ratios(a)
        bound = stability_bound(a)

    if json_output:
        payload = {
            "remainders": [reporting.format_rational(v) for v in r],
            "ratios": [reporting.format_rational(v) for v in q],
            "stability_bound": reporting.format_rational(bound),
        }
        _emit_json(ctx, "bound", payload, {"degrees": list(a.degrees)})
        return

    typer.echo(f"stability_bound = {bound}")
    typer.echo("remainders = " + ", ".join(str(v) for v in r))
    typer.echo("ratios = " + ", ".join(str(v) for v in q))


@app.command("codim4")
def codim4_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help="a1 a2 a3 a4"),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
    symbolic: bool = typer.Option(
        False, "--symbolic", help="Also print the unevaluated formulas of the case"
    ),
):
    """Evaluate the codimension four closed form"""
    a = _parse(degrees)
    if a.c != 4:
        _usage_error(f"codim4 expects four degrees, got {a.c}")
    d1, d2, d3, d4 = a.degrees

    with _computation():
        closed = codim4_closed(d1, d2, d3, d4)
        check = engine_check(closed)
        formulas = codim4_symbolic(codim4_case(d1, d2, d3)) if symbolic else []

    if json_output:
        payload = reporting.encode_closed_form(closed)
        payload["ratios"] = reporting.encode_ratios(codim4_ratios(d1, d2, d3))
        payload["engine_agrees"] = check.agrees
        payload["engine_check"] = reporting.encode_engine_check(check)
        if symbolic:
            payload["symbolic"] = [
                {"coefficient": str(coef), "sequence": [str(v) for v in seq]} for coef, seq in formulas
            ]
        _emit_json(ctx, "codim4", payload, {"degrees": list(a.degrees), "symbolic": symbolic})
        return

    bound_kind = ">=" if closed.inclusive else ">"
    typer.echo(f"case = {closed.case_tag}")
    typer.echo(f"applies for a4 {bound_kind} {closed.applicability_bound}: {closed.certified}")
    typer.echo(f"engine_agrees = {check.agrees}")
    for failure in check.failures:
        err_console.print(f"Mismatch: {failure}", markup=False, highlight=False)
    typer.echo(reporting.render_terms(closed.terms))
    if symbolic:
        typer.echo("")
        for coef, seq in formulas:
            typer.echo(f"{coef} * pi({', '.join(str(v) for v in seq)})")


@app.command("conjecture")
def conjecture_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=NEXT_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Compare Phase-2 coefficients with their conjectured closed form"""
    a, a_next = _parse_with_next(degrees)
    with _computation():
        report = conjecture_phase2(a, a_next)

    if json_output:
        _emit_json(
            ctx, "conjecture", reporting.encode_conjecture(report),
            {"degrees": list(a.degrees), "a_next": a_next},
        )
        return

    for row in report.rows:
        mark = "ok" if row.holds else "FAILS"
        typer.echo(f"s={row.s}: predicted {row.predicted}, actual {row.actual} [{mark}]")
    typer.echo(f"holds = {report.holds} (within hypothesis: {report.within_hypothesis})")


@app.command("stability")
def stability_cmd(
    ctx: typer.Context,
    degrees: List[str] = typer.Argument(..., help=NEXT_HELP),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Report term count, order compatibility and linearity against the stable pattern"""
    a, a_next = _parse_with_next(degrees)
    with _computation():
        report = stability_report(a, a_next)

    if json_output:
        _emit_json(
            ctx, "stability", reporting.encode_stability(report),
            {"degrees": list(a.degrees), "a_next": a_next},
        )
        return

    console.print(reporting.flags_table({
        "Stability bound": str(report.stability_bound),
        "Terms": f"{report.term_count} (stable: {report.expected_terms})",
        "Compatible order": report.compatible_order,
        "Samples": ", ".join(str(p) for p in report.samples),
        "Sample term counts": ", ".join(str(n) for n in report.sample_term_counts),
        "Order stable": report.order_stable,
        "Linear": report.linear,
    }, title=f"Stability of {a} + {a_next}"))
    for fit in report.fits:
        typer.echo(f"y_{fit.s}(x) = {fit}")


@app.command("sweep")
def sweep_cmd(
    ctx: typer.Context,
    codim: Optional[int] = typer.Option(None, "--codim", help="Codimension of the base tuples"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", help="Largest base degree"),
    next_range: Optional[int] = typer.Option(
        None, "--next-range", help="How many appended degrees to try above a_c and above the bound"
    ),
    jobs: Optional[int] = typer.Option(None, "--jobs", "-j", help="Number of worker processes"),
    out: Optional[str] = typer.Option(None, "--out", "-o", help="Write one JSON line per run"),
    save_report: bool = typer.Option(
        False, "--save-report", help="Also save the summary as a timestamped JSON report"
    ),
    report_dir: str = typer.Option(
        "reports", "--report-dir", "-r", help="Directory for saved reports"
    ),
    json_output: bool = typer.Option(False, "--json", help="Print a JSON document"),
):
    """Check every base up to a maximal degree and report counterexamples"""
    config = _config(ctx)
    config.update({
        "codim": codim,
        "max_degree": max_degree,
        "next_range": next_range,
        "jobs": jobs,
        "sweep_out": out,
    })
    try:
        params = SweepParams(
            codim=int(config.get("codim")),
            max_degree=int(config.get("max_degree")),
            next_range=int(config.get("next_range")),
        )
    except ValueError as e:
        _usage_error(f"{type(e).__name__}: {e}")

    with _computation():
        if json_output:
            summary = run_sweep(params, jobs=config.jobs, chunk_size=int(config.get("chunk_size", 1)))
        else:
            with Progress(
                SpinnerColumn(),
                TextColumn("[bold blue]Sweeping bases"),
                BarColumn(),
                TextColumn("[bold]{task.completed}/{task.total}"),
                transient=True,
                console=err_console,
            ) as progress:
                total = sum(1 for _ in iter_bases(params.codim, params.max_degree))
                task = progress.add_task("sweep", total=total)
                summary = run_sweep(
                    params,
                    jobs=config.jobs,
                    chunk_size=int(config.get("chunk_size", 1)),
                    progress=lambda n: progress.advance(task, n),
                )

    if config.get("sweep_out"):
        path = write_jsonl(summary, config.get("sweep_out"))
        err_console.print(f"Wrote {summary.total} runs to {path}", markup=False, highlight=False)

    if save_report:
        document = reporting.make_document("sweep", summary.to_dict(), config.as_dict())
        path = reporting.save_json_report(document, output_dir=report_dir)
        err_console.print(f"Saved report to {path}", markup=False, highlight=False)

    if json_output:
        _emit_json(ctx, "sweep", summary.to_dict(), config.as_dict())
    else:
        skipped = sum(summary.skipped.values())
        color = "red" if summary.counterexamples else "green"
        console.print(Panel.fit(
            f"[bold {color}]{summary.ok} ok, {skipped} skipped, "
            f"{len(summary.counterexamples)} counterexamples[/bold {color}]",
            title=f"Sweep codim {params.codim}, degrees <= {params.max_degree}",
        ))
        for reason, count in summary.skipped.items():
            typer.echo(f"skipped:{reason} = {count}")
        for result in summary.counterexamples:
            typer.echo(f"counterexample {result.base} + {result.a_next}: {'; '.join(result.failures)}")

    if summary.counterexamples:
        raise typer.Exit(code=EXIT_COUNTEREXAMPLE)


def main_cli():
    """
    Main entry point for the command-line interface.
    """
    app()


if __name__ == "__main__":
    main_cli()
