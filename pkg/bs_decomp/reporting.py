"""
Reporting utilities for decompositions.

This module provides the JSON encoding of every result type (exact rationals
as "n/d" strings), the versioned output envelope, Macaulay2-style text tables
and rich console tables.
"""

import json
import logging
import os
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from rich.table import Table

from .bs_decomposition import Decomposition, EliminationRecord, Term
from .codim4 import ClosedFormDecomposition, EngineCheck, RatioReport
from .diagram_core import Diagram, Position, make_diagram
from .pure_diagrams import DegreeSequence
from .recursive_decomposition import ConjectureReport, RecursiveReport, StabilityReport

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"


def format_rational(q: Fraction) -> str:
    """Encode a rational as "n" or "n/d"."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Decode "n" or "n/d" without passing through float."""
    if not isinstance(text, str):
        raise ValueError(f"Rational must be encoded as a string, got {text!r}")
    return Fraction(text)


def encode_diagram(D: Diagram) -> Dict[str, Any]:
    return {
        "columns": D.columns,
        "coords": "column-degree",
        "entries": [[i, j, format_rational(v)] for (i, j), v in D.items()],
    }


def decode_diagram(data: Mapping[str, Any]) -> Diagram:
    """
    Rebuild a diagram from its JSON form.

    Raises:
        ValueError: If the coordinates are not column-degree or an entry is malformed
    """
    if data.get("coords", "column-degree") != "column-degree":
        raise ValueError(f"Unsupported diagram coordinates {data.get('coords')!r}")
    return make_diagram(
        int(data["columns"]),
        ((int(i), int(j), parse_rational(v)) for i, j, v in data["entries"]),
    )


def encode_sequence(d: DegreeSequence) -> List[int]:
    return list(d.values)


def encode_terms(terms: Iterable[Term]) -> List[Dict[str, Any]]:
    return [
        {"coefficient": format_rational(t.coefficient), "sequence": encode_sequence(t.sequence)}
        for t in terms
    ]


def encode_decomposition(dec: Decomposition) -> Dict[str, Any]:
    return {"columns": dec.columns, "terms": encode_terms(dec.terms)}


def decode_decomposition(data: Mapping[str, Any]) -> Decomposition:
    terms = tuple(
        Term(parse_rational(t["coefficient"]), DegreeSequence(t["sequence"]))
        for t in data["terms"]
    )
    return Decomposition(terms, int(data["columns"]))


def _encode_position(position: Optional[Position]) -> Optional[List[int]]:
    return None if position is None else [position[0], position[1]]


def encode_record(record: EliminationRecord) -> Dict[str, Any]:
    return {
        "size": record.size,
        "mass_elimination": record.has_mass_elimination(),
        "mass_steps": record.mass_steps(),
        "order": [sorted([i, j] for i, j in positions) for positions in record.order],
        "table": [[i, j, step] for (i, j), step in sorted(record.table.items())],
    }


def encode_recursive(report: RecursiveReport) -> Dict[str, Any]:
    m, phase2_end = report.phase_boundaries
    return {
        "base": list(report.base.degrees),
        "a_next": report.a_next,
        "terms": encode_terms(report.terms),
        "targets": [_encode_position(t) for t in report.targets],
        "phase_boundaries": [m, phase2_end],
        "zero_indices": report.zero_indices,
        "error_diagram": encode_diagram(report.error_diagram),
        "remainders": [format_rational(r) for r in report.remainders],
        "stability_bound": format_rational(report.stability_bound),
        "flags": {
            "is_chain": report.is_chain,
            "all_positive": report.all_positive,
            "agrees_with_standard": report.agrees_with_standard,
            "compatible_order": report.compatible_order,
            "symmetric": report.symmetric,
            "palindromic": report.palindromic,
            "independent": report.independent,
        },
    }


def encode_conjecture(report: ConjectureReport) -> Dict[str, Any]:
    return {
        "base": list(report.base.degrees),
        "a_next": report.a_next,
        "stability_bound": format_rational(report.stability_bound),
        "within_hypothesis": report.within_hypothesis,
        "holds": report.holds,
        "rows": [
            {
                "s": row.s,
                "predicted": format_rational(row.predicted),
                "actual": format_rational(row.actual),
                "holds": row.holds,
            }
            for row in report.rows
        ],
    }


def encode_stability(report: StabilityReport) -> Dict[str, Any]:
    return {
        "base": list(report.base.degrees),
        "a_next": report.a_next,
        "stability_bound": format_rational(report.stability_bound),
        "term_count": report.term_count,
        "expected_terms": report.expected_terms,
        "compatible_order": report.compatible_order,
        "samples": list(report.samples),
        "sample_term_counts": list(report.sample_term_counts),
        "stable_term_count": report.stable_term_count,
        "order_stable": report.order_stable,
        "linear": report.linear,
        "fits": [
            {
                "s": fit.s,
                "slope": format_rational(fit.slope),
                "intercept": format_rational(fit.intercept),
                "linear": fit.linear,
                "matches_remainder": fit.matches_remainder,
            }
            for fit in report.fits
        ],
    }


def encode_closed_form(closed: ClosedFormDecomposition) -> Dict[str, Any]:
    bound = closed.applicability_bound
    return {
        "degrees": list(closed.degrees),
        "case_tag": closed.case_tag,
        "terms": encode_terms(closed.terms),
        "raw_terms": encode_terms(closed.raw_terms),
        "applicability_bound": None if bound is None else format_rational(bound),
        "inclusive": closed.inclusive,
        "certified": closed.certified,
    }


def encode_ratios(report: RatioReport) -> Dict[str, Any]:
    return {
        "case_tag": report.case_tag,
        "ratios": [format_rational(r) for r in report.ratios],
        "bound": format_rational(report.bound),
        "inclusive": report.inclusive,
    }


def encode_engine_check(check: EngineCheck) -> Dict[str, Any]:
    return {
        "engine_agrees": check.agrees,
        "greedy_agrees": check.greedy_agrees,
        "recursive_agrees": check.recursive_agrees,
        "failures": list(check.failures),
    }


def make_document(command: str, payload: Any, args: Optional[Mapping[str, Any]] = None) -> Dict[str, Any]:
    """
    Wrap a payload in the versioned output envelope.

    Args:
        command: Name of the command that produced the payload
        payload: JSON-able payload
        args: Command arguments to record

    Returns:
        Dictionary with schema_version, command and payload
    """
    return {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": command, "args": dict(args or {})},
        "payload": payload,
    }


def parse_document(text: str) -> Dict[str, Any]:
    """
    Load an output document and check its schema version.

    Raises:
        ValueError: If the text is not a document of the supported version
    """
    document = json.loads(text)
    if not isinstance(document, dict) or "payload" not in document:
        raise ValueError("Not a bs-decomp output document")
    version = document.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ValueError(f"Unsupported schema version {version!r}; expected {SCHEMA_VERSION!r}")
    return document


def dumps(document: Mapping[str, Any], indent: int = 2) -> str:
    return json.dumps(document, indent=indent)


def _grid(columns: int, cells: Mapping[Tuple[int, int], str], totals: Sequence[str]) -> str:
    rows = sorted({row for _, row in cells})
    header = [str(i) for i in range(columns)]
    widths = [
        max([len(header[i]), len(totals[i])] + [len(text) for (col, _), text in cells.items() if col == i])
        for i in range(columns)
    ]
    labels = ["total:"] + [f"{row}:" for row in rows]
    label_width = max(len(label) for label in labels)

    def line(label: str, values: Sequence[str]) -> str:
        body = " ".join(v.rjust(w) for v, w in zip(values, widths))
        return f"{label.rjust(label_width)} {body}".rstrip()

    lines = [line("", header), line("total:", totals)]
    for row in rows:
        lines.append(line(f"{row}:", [cells.get((i, row), ".") for i in range(columns)]))
    return "\n".join(lines)


def render_betti_table(D: Diagram) -> str:
    """
    Render a diagram in the Macaulay2 layout.

    Columns are homological degrees, rows are indexed by j - i, and zero entries print as ".".
    """
    cells = {(i, j - i): format_rational(v) for (i, j), v in D.items()}
    totals = [format_rational(sum(D.column(i).values(), Fraction(0))) for i in range(D.columns)]
    return _grid(D.columns, cells, totals)


def render_elimination_table(record: EliminationRecord, columns: int) -> str:
    """Render the step at which each position was eliminated, in the Betti table layout."""
    cells = {(i, j - i): str(step) for (i, j), step in record.table.items()}
    totals = [str(sum(1 for (i, _) in record.table if i == col)) for col in range(columns)]
    return _grid(columns, cells, totals)


def render_terms(terms: Iterable[Term]) -> str:
    return "\n".join(str(t) for t in terms)


def terms_table(terms: Sequence[Term], title: str, targets: Optional[Sequence[Any]] = None) -> Table:
    """Build a rich table of coefficients and degree sequences."""
    table = Table(title=title)
    table.add_column("s", style="cyan", justify="right")
    table.add_column("Coefficient", style="green", justify="right")
    table.add_column("Sequence")
    if targets is not None:
        table.add_column("Target", style="magenta")

    for s, term in enumerate(terms, start=1):
        row = [str(s), format_rational(term.coefficient), str(term.sequence)]
        if targets is not None:
            target = targets[s - 1]
            row.append("-" if target is None else f"({target[0]},{target[1]})")
        table.add_row(*row)
    return table


def flags_table(flags: Mapping[str, Any], title: str = "Summary") -> Table:
    table = Table(title=title)
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    for key, value in flags.items():
        table.add_row(key, str(value))
    return table


def save_json_report(
    document: Dict[str, Any], output_path: Optional[str] = None, output_dir: str = "reports"
) -> str:
    """
    Save an output document as a JSON report.

    Args:
        document: Document built with make_document
        output_path: Optional file path to save the report to
        output_dir: Directory for the timestamped default path

    Returns:
        Path to the saved report file
    """
    if output_path is None:
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        report_dir = Path(output_dir)
        report_dir.mkdir(parents=True, exist_ok=True)
        name = document.get("command", {}).get("name", "report")
        output_path = str(report_dir / f"{name}_{timestamp}.json")

    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    report = dict(document)
    report["timestamp"] = datetime.now().isoformat()

    with open(output_path, "w", encoding="utf-8") as f:
        json.dump(report, f, indent=2)

    logger.info(f"Saved report to {output_path}")
    return output_path
