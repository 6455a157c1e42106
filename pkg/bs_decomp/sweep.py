"""
Exhaustive property sweep.

This module provides the sweep over all base tuples up to a maximal degree:
for each base and each appended degree in range it runs the recursive
algorithm and checks the properties that must hold, classifying the run as
ok, skipped (unsupported input) or counterexample.
"""

import itertools
import json
import logging
import os
import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from math import floor
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from .assertions import (
    assert_chain,
    assert_palindromic,
    assert_recomposes,
    assert_same_terms,
    assert_symmetric_terms,
    assert_zero_diagram,
)
from .bs_decomposition import decompose
from .codim4 import codim3_closed, codim4_closed, codim4_ratios, codim4_remainders
from .errors import (
    BettiError,
    BoundNotMet,
    CodimensionTooSmall,
    DegenerateSequence,
    MassEliminationUnsupported,
)
from .koszul import DegreeTuple, betti_ci
from .recursive_decomposition import (
    conjecture_phase2,
    new_algorithm,
    remainders,
    stability_bound,
)

logger = logging.getLogger(__name__)

OK = "ok"
COUNTEREXAMPLE = "counterexample"
SKIPPED_ERRORS = (DegenerateSequence, MassEliminationUnsupported)


@dataclass(frozen=True)
class SweepParams:
    """
    Ranges of a sweep.

    Bases are all nondecreasing codim-tuples with entries in 1..max_degree.
    Appended degrees run over a_c..a_c+next_range and over the next_range
    integers above the stability bound of the base.
    """

    codim: int
    max_degree: int
    next_range: int

    def __post_init__(self):
        if self.codim < 2:
            raise CodimensionTooSmall(f"Sweep codimension {self.codim} < 2")
        if self.max_degree < 1:
            raise ValueError(f"max_degree must be positive, got {self.max_degree}")
        if self.next_range < 0:
            raise ValueError(f"next_range must be nonnegative, got {self.next_range}")


@dataclass(frozen=True)
class RunResult:
    base: Tuple[int, ...]
    a_next: Optional[int]
    status: str
    failures: Tuple[str, ...] = ()

    @property
    def is_counterexample(self) -> bool:
        return self.status == COUNTEREXAMPLE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "base": list(self.base),
            "a_next": self.a_next,
            "status": self.status,
            "failures": list(self.failures),
        }


@dataclass
class SweepSummary:
    params: SweepParams
    results: List[RunResult] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def ok(self) -> int:
        return sum(1 for r in self.results if r.status == OK)

    @property
    def skipped(self) -> Dict[str, int]:
        """Skipped runs counted by the error that caused the skip."""
        counts = Counter(
            r.status.split(":", 1)[1] for r in self.results if r.status.startswith("skipped:")
        )
        return dict(sorted(counts.items()))

    @property
    def counterexamples(self) -> List[RunResult]:
        return [r for r in self.results if r.is_counterexample]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": {
                "codim": self.params.codim,
                "max_degree": self.params.max_degree,
                "next_range": self.params.next_range,
            },
            "total": self.total,
            "ok": self.ok,
            "skipped": self.skipped,
            "counterexamples": [r.to_dict() for r in self.counterexamples],
        }


def iter_bases(codim: int, max_degree: int) -> Iterator[DegreeTuple]:
    for degrees in itertools.combinations_with_replacement(range(1, max_degree + 1), codim):
        yield DegreeTuple(degrees)


def next_degrees(a: DegreeTuple, next_range: int, bound: Optional[int] = None) -> List[int]:
    """Appended degrees a_c..a_c+next_range, plus bound+1..bound+next_range when given."""
    values = set(range(a.largest, a.largest + next_range + 1))
    if bound is not None:
        values.update(range(bound + 1, bound + next_range + 1))
    return sorted(values)


def _skipped(base: Tuple[int, ...], a_next: Optional[int], error: BettiError) -> RunResult:
    return RunResult(base, a_next, f"skipped:{type(error).__name__}")


def _check(label: str, failures: List[str], check: Callable[[], None]) -> None:
    try:
        check()
    except AssertionError as e:
        failures.append(f"{label}: {e}")


def _check_linear(a: DegreeTuple, a_next: int, coefficients: Sequence) -> None:
    z = decompose(betti_ci(a))[0].coefficients
    r = remainders(a)
    for s, (zs, rs) in enumerate(zip(z, r), start=1):
        if coefficients[s - 1] != zs * a_next - rs:
            raise AssertionError(
                f"y_{s} = {coefficients[s - 1]} differs from z_s * a_next - r_s = {zs * a_next - rs}"
            )


def _check_conjecture(a: DegreeTuple, a_next: int) -> None:
    report = conjecture_phase2(a, a_next)
    for row in report.rows:
        if not row.holds:
            raise AssertionError(f"Phase-2 step {row.s}: predicted {row.predicted}, got {row.actual}")


def _check_codim3(a: DegreeTuple, a_next: int, failures: List[str]) -> None:
    d1, d2, d3 = a.degrees
    _check(
        "codim3 closed form",
        failures,
        lambda: assert_same_terms(codim3_closed(d1, d2, d3).terms, decompose(betti_ci(a))[0].terms),
    )

    def remainders_match() -> None:
        closed = list(codim4_remainders(d1, d2, d3).values)
        engine = remainders(a)
        if closed != engine:
            raise AssertionError(f"closed-form remainders {closed} differ from {engine}")

    _check("codim4 remainders", failures, remainders_match)

    if codim4_ratios(d1, d2, d3).admits(a_next):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundNotMet)
            closed = codim4_closed(d1, d2, d3, a_next)
        extended = decompose(betti_ci(a.extend(a_next)))[0]
        _check("codim4 closed form", failures, lambda: assert_same_terms(closed.terms, extended.terms))


def check_run(a: DegreeTuple, a_next: int, bound) -> RunResult:
    """
    Run the recursive algorithm for a + a_next and check its properties.

    Returns:
        RunResult with status ok, skipped:<ErrorName> or counterexample
    """
    base = a.degrees
    try:
        report = new_algorithm(a, a_next)
    except SKIPPED_ERRORS as e:
        return _skipped(base, a_next, e)
    except BettiError as e:
        return RunResult(base, a_next, COUNTEREXAMPLE, (f"{type(e).__name__}: {e}",))

    extended = betti_ci(a.extend(a_next))
    failures: List[str] = []
    _check("error diagram", failures, lambda: assert_zero_diagram(report.error_diagram))
    _check("recomposition", failures, lambda: assert_recomposes(extended, report.as_decomposition()))
    _check("symmetry", failures, lambda: assert_symmetric_terms(report.terms))
    _check("palindrome", failures, lambda: assert_palindromic(report.terms))
    if a_next >= a.total:
        _check("chain", failures, lambda: assert_chain(report.sequences))
    if a_next > bound:
        _check(
            "agreement",
            failures,
            lambda: assert_same_terms(report.terms, decompose(extended)[0].terms),
        )
        _check("conjecture", failures, lambda: _check_conjecture(a, a_next))
        if a_next >= a.total:
            _check("linearity", failures, lambda: _check_linear(a, a_next, report.coefficients))
    if a.c == 3:
        try:
            _check_codim3(a, a_next, failures)
        except BettiError as e:
            failures.append(f"codim3 oracles: {type(e).__name__}: {e}")

    if failures:
        logger.warning(f"Counterexample at {a} + {a_next}: {failures}")
        return RunResult(base, a_next, COUNTEREXAMPLE, tuple(failures))
    return RunResult(base, a_next, OK)


def check_base(base: Tuple[int, ...], next_range: int) -> List[RunResult]:
    """
    Check every appended degree for one base; module-level so worker processes can pickle it.
    """
    a = DegreeTuple(tuple(base))
    try:
        bound = stability_bound(a)
    except SKIPPED_ERRORS as e:
        return [_skipped(a.degrees, None, e)]

    results = []
    for a_next in next_degrees(a, next_range, floor(bound)):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundNotMet)
            results.append(check_run(a, a_next, bound))
    return results


def _check_chunk(bases: Sequence[Tuple[int, ...]], next_range: int) -> List[RunResult]:
    results = []
    for base in bases:
        results.extend(check_base(base, next_range))
    return results


def run_sweep(
    params: SweepParams,
    jobs: int = 1,
    chunk_size: int = 1,
    progress: Optional[Callable[[int], None]] = None,
) -> SweepSummary:
    """
    Run the sweep, in worker processes when jobs > 1.

    Args:
        params: Sweep ranges
        jobs: Number of worker processes
        chunk_size: Bases per submitted task
        progress: Called with the number of bases finished after each task

    Returns:
        SweepSummary with results sorted by (base, a_next)
    """
    bases = [a.degrees for a in iter_bases(params.codim, params.max_degree)]
    chunks = [bases[k:k + chunk_size] for k in range(0, len(bases), max(1, chunk_size))]
    logger.info(f"Sweeping {len(bases)} bases of codimension {params.codim} with {jobs} job(s)")

    results: List[RunResult] = []
    if jobs <= 1:
        for chunk in chunks:
            results.extend(_check_chunk(chunk, params.next_range))
            if progress:
                progress(len(chunk))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = {
                executor.submit(_check_chunk, chunk, params.next_range): chunk for chunk in chunks
            }
            for future in as_completed(futures):
                results.extend(future.result())
                if progress:
                    progress(len(futures[future]))

    results.sort(key=lambda r: (r.base, -1 if r.a_next is None else r.a_next))
    summary = SweepSummary(params, results)
    logger.info(
        f"Sweep finished: {summary.ok} ok, {sum(summary.skipped.values())} skipped, "
        f"{len(summary.counterexamples)} counterexamples"
    )
    return summary


def write_jsonl(summary: SweepSummary, path: str) -> str:
    """Write one JSON line per run."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for result in summary.results:
            f.write(json.dumps(result.to_dict()) + "\n")
    return path
