"""
Recursive decomposition of complete intersections.

This module provides the three-phase algorithm that decomposes the Betti
diagram of a codimension c+1 complete intersection from the greedy
decomposition of its codimension c base, the remainders r_s and stability
bound that control its coefficients, the Phase-2 coefficient conjecture check
and a stabilization report.

Phase 1 lifts every base sequence d^s to concat(d^s, a + a_next). Phase 2
walks the last c-1 columns over to degrees containing a_next. Phase 3 uses the
check-duals of the Phase-1 sequences in reverse order.
"""

import logging
import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor, prod
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import sympy

from .bs_decomposition import (
    Decomposition,
    EliminationRecord,
    Term,
    decompose,
    is_compatible,
    merge_terms,
)
from .diagram_core import Diagram, Position, axpy
from .errors import (
    ANextTooSmall,
    BoundNotMet,
    CodimensionTooSmall,
    DegenerateSequence,
    InternalInconsistency,
    MassEliminationUnsupported,
    NotStrictlyIncreasing,
)
from .koszul import DegreeTuple, betti_ci
from .pure_diagrams import DegreeSequence, check_dual, concat, is_chain, pure_diagram, pure_entry

logger = logging.getLogger(__name__)

# Offsets of the three a_next samples above the stability bound.
SAMPLE_OFFSETS = (1, 8, 19)


@dataclass(frozen=True)
class RecursiveReport:
    """
    Result of the recursive algorithm for base a and appended degree a_next.

    Attributes:
        base: Base degree tuple (a_1, ..., a_c)
        a_next: Appended degree a_{c+1}
        terms: (y_s, e^s) for s = 1..N, zero coefficients included, repeated sequences
            sharing their total evenly
        targets: Position each step eliminated (None when a step had nothing left to clear)
        phase_boundaries: (last Phase-1 step, last Phase-2 step)
        error_diagram: What remains after all steps
        remainders: r_1..r_m of the base
        stability_bound: max(a, r_s/z_s)
        is_chain: Sequences weakly increase componentwise
        all_positive: Every y_s > 0
        agrees_with_standard: Merged nonzero terms equal the greedy decomposition
        compatible_order: Greedy elimination order of the extension begins with the base order
        symmetric: Merged coefficients agree on check-dual pairs of sequences
        palindromic: y_s = y_{N+1-s} and e^s = check_dual(e^{N+1-s}) for all s
        independent: Each distinct sequence owns a position no later distinct sequence uses,
            so the coefficients are uniquely determined
    """

    base: DegreeTuple
    a_next: int
    terms: Tuple[Term, ...]
    targets: Tuple[Optional[Position], ...]
    phase_boundaries: Tuple[int, int]
    error_diagram: Diagram
    remainders: Tuple[Fraction, ...]
    stability_bound: Fraction
    is_chain: bool
    all_positive: bool
    agrees_with_standard: bool
    compatible_order: bool
    symmetric: bool
    palindromic: bool
    independent: bool

    @property
    def extended(self) -> DegreeTuple:
        return self.base.extend(self.a_next)

    @property
    def coefficients(self) -> List[Fraction]:
        return [t.coefficient for t in self.terms]

    @property
    def sequences(self) -> List[DegreeSequence]:
        return [t.sequence for t in self.terms]

    @property
    def zero_indices(self) -> List[int]:
        """1-based indices s with y_s = 0."""
        return [s + 1 for s, t in enumerate(self.terms) if t.coefficient == 0]

    def merged(self) -> List[Term]:
        return merge_terms(self.terms)

    def as_decomposition(self) -> Decomposition:
        return Decomposition(self.terms, self.base.c + 2)


@dataclass(frozen=True)
class ConjectureRow:
    s: int
    predicted: Fraction
    actual: Fraction

    @property
    def holds(self) -> bool:
        return self.predicted == self.actual


@dataclass(frozen=True)
class ConjectureReport:
    base: DegreeTuple
    a_next: int
    stability_bound: Fraction
    within_hypothesis: bool
    rows: Tuple[ConjectureRow, ...]

    @property
    def holds(self) -> bool:
        return all(row.holds for row in self.rows)


@dataclass(frozen=True)
class LinearFit:
    """Interpolated coefficient y_s(x) = slope * x + intercept in the appended degree x."""

    s: int
    slope: Fraction
    intercept: Fraction
    linear: bool
    matches_remainder: bool

    def __str__(self) -> str:
        x = sympy.Symbol("x")
        return str(_to_sympy(self.slope) * x + _to_sympy(self.intercept))


@dataclass(frozen=True)
class StabilityReport:
    base: DegreeTuple
    a_next: int
    stability_bound: Fraction
    term_count: int
    expected_terms: int
    compatible_order: bool
    samples: Tuple[int, ...]
    sample_term_counts: Tuple[int, ...]
    fits: Tuple[LinearFit, ...]
    order_stable: bool

    @property
    def stable_term_count(self) -> bool:
        return all(count == self.expected_terms for count in self.sample_term_counts)

    @property
    def linear(self) -> bool:
        return bool(self.fits) and all(fit.linear and fit.matches_remainder for fit in self.fits)


def _base_decomposition(a: DegreeTuple) -> Tuple[Decomposition, EliminationRecord]:
    dec, record = decompose(betti_ci(a))
    if record.has_mass_elimination():
        raise MassEliminationUnsupported(
            f"beta{a} has mass elimination at steps {record.mass_steps()}"
        )
    return dec, record


def _base_targets(a: DegreeTuple, record: EliminationRecord) -> List[Position]:
    # Step m is pinned to (c, a) because the final step zeroes several positions.
    targets = [step.position for step in record.steps[:-1]]
    targets.append((a.c, a.total))
    return targets


def _phase_sequences(
    a: DegreeTuple, a_next: int, dec: Decomposition
) -> Tuple[List[DegreeSequence], int, int]:
    A = a.total + a_next
    c = a.c
    try:
        sequences = [concat(d, A) for d in dec.sequences]
    except NotStrictlyIncreasing as e:
        raise DegenerateSequence(f"Phase 1 sequence is not increasing: {e}") from e
    m = len(sequences)

    if a_next != a.largest:
        for k in range(1, c):
            value = sum(a.degrees[: c - k]) + a_next
            try:
                sequences.append(sequences[-1].replace(c - k + 1, value))
            except NotStrictlyIncreasing as e:
                raise DegenerateSequence(f"Phase 2 step {k} is not increasing: {e}") from e
    phase2_end = len(sequences)

    sequences.extend(check_dual(sequences[s]) for s in range(m - 1, -1, -1))
    return sequences, m, phase2_end


def _differing_column(sequences: Sequence[DegreeSequence], s: int) -> Optional[int]:
    current = sequences[s]
    for later in sequences[s + 1:]:
        if later != current:
            for i, (x, y) in enumerate(zip(current, later)):
                if x != y:
                    return i
    return None


def _is_independent(sequences: Sequence[DegreeSequence]) -> bool:
    distinct: List[DegreeSequence] = []
    for seq in sequences:
        if seq not in distinct:
            distinct.append(seq)
    for k, seq in enumerate(distinct[:-1]):
        later = set()
        for other in distinct[k + 1:]:
            later.update(enumerate(other))
        if all(pos in later for pos in enumerate(seq)):
            return False
    return True


def _is_symmetric(terms: Sequence[Term]) -> bool:
    merged = {seq: coef for coef, seq in merge_terms(terms)}
    return all(merged.get(check_dual(seq), Fraction(0)) == coef for seq, coef in merged.items())


def _multiset(terms: Sequence[Term]) -> Counter:
    return Counter((t.coefficient, t.sequence.values) for t in merge_terms(terms))


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def phase2_target(running: Diagram, e: DegreeSequence, column: int) -> Tuple[Position, List[int]]:
    """
    Target of a Phase-2 step: the entry (column, e_column) of the running diagram.

    Returns:
        The target and the sorted degrees of nonzero running entries below it in
        that column; those stay in place and are left to Phase 3
    """
    lower = sorted(j for j in running.column(column) if j < e[column])
    return (column, e[column]), lower


def split_repeated(terms: Sequence[Term]) -> List[Term]:
    """
    Spread the total coefficient of each repeated sequence evenly over its occurrences.

    The sum of the terms is unchanged. Since e^s and e^{N+1-s} are check-duals,
    a symmetric merged decomposition becomes palindromic.
    """
    counts = Counter(t.sequence for t in terms)
    totals: Dict[DegreeSequence, Fraction] = {}
    for coefficient, sequence in terms:
        totals[sequence] = totals.get(sequence, Fraction(0)) + coefficient
    return [Term(totals[t.sequence] / counts[t.sequence], t.sequence) for t in terms]


def _is_palindromic(terms: Sequence[Term]) -> bool:
    N = len(terms)
    return all(
        terms[s].coefficient == terms[N - 1 - s].coefficient
        and terms[s].sequence == check_dual(terms[N - 1 - s].sequence)
        for s in range(N)
    )


def new_algorithm(a: DegreeTuple, a_next: int) -> RecursiveReport:
    """
    Run the three-phase recursive decomposition.

    Every step subtracts y_s * pi(e^s) so that the running diagram vanishes at
    the step's target position. Targets are (i_s, j_s) of the base elimination
    order in Phase 1 (with (c, a) at step m), the entry (c-k, e_{c-k}) in Phase-2
    step k, and in Phase 3 the entry of the first column where e^s differs from
    the next distinct sequence. The final step clears whatever is left on the
    last sequence. When a sequence occurs more than once (as when a_next = a_c),
    its total coefficient is split evenly over its occurrences.

    Args:
        a: Base degree tuple with c >= 2
        a_next: Appended degree, at least the largest base degree

    Returns:
        RecursiveReport with coefficients, error diagram and flags

    Raises:
        CodimensionTooSmall: If c < 2
        ANextTooSmall: If a_next < a_c
        MassEliminationUnsupported: If the base greedy order is not singleton
        DegenerateSequence: If a generated sequence is not increasing or the
            sequences do not cover the extended diagram
        InternalInconsistency: If the final error diagram is nonzero
    """
    if a.c < 2:
        raise CodimensionTooSmall(f"Base {a} has codimension {a.c} < 2")
    if a_next < a.largest:
        raise ANextTooSmall(f"a_next = {a_next} is smaller than a_c = {a.largest}")

    dec, record = _base_decomposition(a)
    sequences, m, phase2_end = _phase_sequences(a, a_next, dec)
    N = len(sequences)
    base_targets = _base_targets(a, record)

    extended = a.extend(a_next)
    target_diagram = betti_ci(extended)
    running = target_diagram
    terms: List[Term] = []
    targets: List[Optional[Position]] = []

    for s, e in enumerate(sequences, start=1):
        if s <= m:
            target: Optional[Position] = base_targets[s - 1]
        elif s <= phase2_end:
            k = s - m
            target, lower = phase2_target(running, e, a.c - k)
            if lower:
                logger.info(
                    f"Phase 2 step {k} for {extended}: column {target[0]} still has entries "
                    f"at degrees {lower} below {target[1]}"
                )
        elif s < N:
            column = _differing_column(sequences, s - 1)
            target = (column, e[column]) if column is not None else None
        else:
            leftover = running.support() - set(enumerate(e))
            if leftover:
                raise DegenerateSequence(
                    f"Sequences for {a} + {a_next} leave entries {sorted(leftover)} "
                    f"outside the final sequence {e}"
                )
            target = next(((i, j) for i, j in enumerate(e) if running.get(i, j)), None)

        if target is None:
            y = Fraction(0)
        else:
            y = running.get(*target) / pure_entry(e, target[0])
            running = axpy(running, -y, pure_diagram(e))
        logger.debug(f"s={s}: y={y} e={e} target={target}")
        terms.append(Term(y, e))
        targets.append(target)

    if not running.is_zero():
        raise InternalInconsistency(f"Error diagram for {extended} is nonzero: {running}")

    if len(set(sequences)) < N:
        terms = split_repeated(terms)
        logger.debug(f"split repeated sequences of {extended}: {[str(t) for t in terms]}")

    standard_dec, standard_record = decompose(target_diagram)
    agrees = _multiset(terms) == _multiset(standard_dec.terms)
    r = _remainders_from(a, dec, record)
    bound = _bound_from(a, dec, r)
    coefficients = [t.coefficient for t in terms]

    report = RecursiveReport(
        base=a,
        a_next=a_next,
        terms=tuple(terms),
        targets=tuple(targets),
        phase_boundaries=(m, phase2_end),
        error_diagram=running,
        remainders=tuple(r),
        stability_bound=bound,
        is_chain=is_chain(sequences),
        all_positive=all(y > 0 for y in coefficients),
        agrees_with_standard=agrees,
        compatible_order=is_compatible(record, standard_record),
        symmetric=_is_symmetric(terms),
        palindromic=_is_palindromic(terms),
        independent=_is_independent(sequences),
    )
    logger.info(f"recursive decomposition of {extended}: {N} terms, bound {bound}")
    return report


def _remainders_from(
    a: DegreeTuple, dec: Decomposition, record: EliminationRecord
) -> List[Fraction]:
    beta = betti_ci(a)
    targets = _base_targets(a, record)
    sequences = dec.sequences
    r: List[Fraction] = []
    for k, (i, j) in enumerate(targets):
        p = pure_entry(sequences[k], i)
        value = Fraction(j - a.total) / p * beta.get(i, j)
        for s in range(k):
            if sequences[s][i] == j:
                value -= pure_entry(sequences[s], i) / p * r[s]
        r.append(value)
    return r


def _bound_from(a: DegreeTuple, dec: Decomposition, r: Sequence[Fraction]) -> Fraction:
    ratios = [rs / z for rs, z in zip(r, dec.coefficients)]
    return max([Fraction(a.total)] + ratios)


def remainders(a: DegreeTuple) -> List[Fraction]:
    """
    Compute the remainders r_1..r_m of a base tuple.

    With (i_k, j_k) the position eliminated at greedy step k ((c, a) at k = m),
    b_k the base entry there and p_k = pi(d^k)_{i_k, j_k}:
    r_k = (j_k - a)/p_k * b_k - sum_{s<k} pi(d^s)_{i_k, j_k}/p_k * r_s.
    For a_next above the stability bound, y_s = z_s * a_next - r_s for s <= m.

    Raises:
        MassEliminationUnsupported: If the base greedy order is not singleton
    """
    dec, record = _base_decomposition(a)
    return _remainders_from(a, dec, record)


def ratios(a: DegreeTuple) -> List[Fraction]:
    """The quotients r_s / z_s."""
    dec, record = _base_decomposition(a)
    return [r / z for r, z in zip(_remainders_from(a, dec, record), dec.coefficients)]


def stability_bound(a: DegreeTuple) -> Fraction:
    """max(a, r_1/z_1, ..., r_m/z_m); above it every coefficient is positive."""
    dec, record = _base_decomposition(a)
    return _bound_from(a, dec, _remainders_from(a, dec, record))


def predicted_phase2(a: DegreeTuple, a_next: int, k: int) -> Fraction:
    """Conjectured coefficient of Phase-2 step k: c! * prod(a) * (a_next - sum_{i<=k} (a_{c+1-i} - a_i))."""
    c = a.c
    drift = sum(a.degrees[c - i] - a.degrees[i - 1] for i in range(1, k + 1))
    return Fraction(factorial(c) * prod(a.degrees) * (a_next - drift))


def conjecture_phase2(a: DegreeTuple, a_next: int) -> ConjectureReport:
    """
    Compare the Phase-2 coefficients with their conjectured closed form.

    Below the stability bound the comparison still runs, but a BoundNotMet
    warning is issued and the report is marked outside the hypothesis.
    """
    report = new_algorithm(a, a_next)
    m, phase2_end = report.phase_boundaries
    within = a_next > report.stability_bound
    if not within:
        warnings.warn(
            BoundNotMet(f"a_next = {a_next} is not above the stability bound {report.stability_bound}")
        )
    rows = tuple(
        ConjectureRow(s, predicted_phase2(a, a_next, s - m), report.coefficients[s - 1])
        for s in range(m + 1, phase2_end + 1)
    )
    return ConjectureReport(a, a_next, report.stability_bound, within, rows)


def _fit(s: int, samples: Sequence[int], values: Sequence[Fraction],
         slope: Fraction, intercept: Fraction) -> LinearFit:
    x = sympy.Symbol("x")
    points = [(samples[0], _to_sympy(values[0])), (samples[1], _to_sympy(values[1]))]
    poly = sympy.Poly(sympy.interpolate(points, x), x)
    coeffs = poly.all_coeffs()
    fit_slope = Fraction(str(coeffs[0])) if len(coeffs) == 2 else Fraction(0)
    fit_intercept = Fraction(str(coeffs[-1]))
    linear = poly.eval(samples[2]) == _to_sympy(values[2])
    return LinearFit(
        s=s,
        slope=fit_slope,
        intercept=fit_intercept,
        linear=bool(linear),
        matches_remainder=(fit_slope, fit_intercept) == (slope, intercept),
    )


def _normalized_order(record: EliminationRecord, x: int) -> List[FrozenSet[Tuple[int, int, int]]]:
    # Base subset sums stay below x, so j >= x exactly when the subset contains x.
    return [
        frozenset((i, j - x, 1) if j >= x else (i, j, 0) for i, j in positions)
        for positions in record.order
    ]


def stability_report(a: DegreeTuple, a_next: int) -> StabilityReport:
    """
    Report how the decomposition of a + a_next compares with the stable pattern.

    The greedy decomposition is evaluated at a_next and at three samples above
    the stability bound; the first and last m coefficients at the samples are
    interpolated linearly and checked against z_s * x - r_s.
    The elimination orders at the samples are compared after shifting every
    degree that contains the sample value back by it.
    """
    dec, record = _base_decomposition(a)
    r = _remainders_from(a, dec, record)
    bound = _bound_from(a, dec, r)
    m = len(dec)

    extended = a.extend(a_next)
    current, current_record = decompose(betti_ci(extended))
    expected = 2 * m + a.c - 1

    start = floor(bound)
    samples = tuple(start + offset for offset in SAMPLE_OFFSETS)
    sample_runs = [decompose(betti_ci(a.extend(x))) for x in samples]
    sample_decs = [dec_x for dec_x, _ in sample_runs]
    orders = [_normalized_order(record_x, x) for (_, record_x), x in zip(sample_runs, samples)]
    order_stable = all(order == orders[0] for order in orders)
    if not order_stable:
        logger.warning(
            f"Elimination orders of {a} at samples {samples} differ after removing the shift"
        )
    counts = tuple(len(d) for d in sample_decs)

    fits: List[LinearFit] = []
    if all(count == expected for count in counts):
        for s in range(m):
            values = [d.coefficients[s] for d in sample_decs]
            fits.append(_fit(s + 1, samples, values, dec.coefficients[s], -r[s]))
        for s in range(m):
            index = expected - m + s
            values = [d.coefficients[index] for d in sample_decs]
            mirror = m - 1 - s
            fits.append(_fit(index + 1, samples, values, dec.coefficients[mirror], -r[mirror]))
    else:
        logger.warning(f"Samples {samples} for {a} give {counts} terms, expected {expected}")

    return StabilityReport(
        base=a,
        a_next=a_next,
        stability_bound=bound,
        term_count=len(current),
        expected_terms=expected,
        compatible_order=is_compatible(record, current_record),
        samples=samples,
        sample_term_counts=counts,
        fits=tuple(fits),
        order_stable=order_stable,
    )
