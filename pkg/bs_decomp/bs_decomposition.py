"""
Greedy Boij-Soederberg decomposition.

This module provides the greedy decomposition of a diagram into pure diagrams
along its chain of minimal degree sequences, together with the elimination
table and order it produces and mass-elimination detection.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from .diagram_core import Diagram, Position, axpy, min_degree_sequence, zero_diagram
from .errors import EmptyColumn, InternalInconsistency, NegativeEntry
from .pure_diagrams import DegreeSequence, check_dual, pure_diagram, pure_entry

logger = logging.getLogger(__name__)


class Term(NamedTuple):
    coefficient: Fraction
    sequence: DegreeSequence

    def __str__(self) -> str:
        return f"{self.coefficient} * pi{self.sequence}"


def merge_terms(terms: Sequence[Term]) -> List[Term]:
    """
    Sum the coefficients of coincident sequences and drop zero terms.

    The first occurrence of a sequence fixes its position in the result.
    """
    totals: Dict[DegreeSequence, Fraction] = {}
    for coefficient, sequence in terms:
        totals[sequence] = totals.get(sequence, Fraction(0)) + coefficient
    return [Term(coef, seq) for seq, coef in totals.items() if coef]


@dataclass(frozen=True)
class Decomposition:
    """Ordered list of (coefficient, degree sequence) terms for a diagram with `columns` columns."""

    terms: Tuple[Term, ...]
    columns: int

    @property
    def coefficients(self) -> List[Fraction]:
        return [t.coefficient for t in self.terms]

    @property
    def sequences(self) -> List[DegreeSequence]:
        return [t.sequence for t in self.terms]

    def __len__(self) -> int:
        return len(self.terms)

    def merged(self) -> List[Term]:
        return merge_terms(self.terms)

    def as_multiset(self) -> Counter:
        """Multiset of merged nonzero (coefficient, sequence) pairs."""
        return Counter((t.coefficient, t.sequence.values) for t in self.merged())


@dataclass(frozen=True)
class EliminationStep:
    """
    One greedy step.

    Attributes:
        index: Step number, starting at 1
        sequence: Degree sequence used in this step
        coefficient: Multiple of its pure diagram that was subtracted
        positions: Positions that became zero
        value: Source-diagram entry at the eliminated position (singleton steps only)
        pure_entry: Entry of the pure diagram at that position (singleton steps only)
    """

    index: int
    sequence: DegreeSequence
    coefficient: Fraction
    positions: FrozenSet[Position]
    value: Optional[Fraction] = None
    pure_entry: Optional[Fraction] = None

    @property
    def position(self) -> Optional[Position]:
        if len(self.positions) == 1:
            return next(iter(self.positions))
        return None


@dataclass(frozen=True)
class EliminationRecord:
    """
    Elimination table and order of a greedy decomposition.

    `table` maps every nonzero source position to the step that zeroed it and
    `order[k-1]` is the set of positions zeroed at step k.
    """

    table: Dict[Position, int]
    order: Tuple[FrozenSet[Position], ...]
    steps: Tuple[EliminationStep, ...] = field(default=())

    @property
    def size(self) -> int:
        """Number of greedy steps (the elimination size m)."""
        return len(self.order)

    def has_mass_elimination(self) -> bool:
        return any(len(positions) > 1 for positions in self.order[:-1])

    def mass_steps(self) -> List[int]:
        """Indices of non-final steps that zero more than one position."""
        return [k + 1 for k, positions in enumerate(self.order[:-1]) if len(positions) > 1]

    def singleton_orders(self) -> bool:
        """True iff every step but the last zeroes exactly one position."""
        return not self.has_mass_elimination()

    def target(self, s: int) -> Optional[Position]:
        """Position zeroed at step s (1-based), or None when that step zeroed several."""
        return self.steps[s - 1].position

    def display_order(self) -> List[List[Tuple[int, int]]]:
        """The order with positions as (column, row = j - i), each step sorted."""
        return [sorted((i, j - i) for i, j in positions) for positions in self.order]


def decompose(D: Diagram) -> Tuple[Decomposition, EliminationRecord]:
    """
    Decompose a diagram greedily into pure diagrams.

    Each step takes the minimal degree sequence d of the running diagram and
    subtracts the largest multiple q of pi(d) that keeps all entries
    nonnegative. Every position that reaches zero in that step is recorded as
    part of the same elimination step.

    Args:
        D: Nonzero diagram with nonnegative entries

    Returns:
        The decomposition and its elimination record

    Raises:
        NegativeEntry: If D has a negative entry
        EmptyColumn: If a column empties before the diagram is exhausted
        NotStrictlyIncreasing: If a minimal degree sequence is not a degree sequence
    """
    for (i, j), value in D.items():
        if value < 0:
            raise NegativeEntry(f"Entry ({i},{j}) = {value} is negative")
    if D.is_zero():
        raise EmptyColumn("Cannot decompose the zero diagram", column=0)

    source = D
    running = D
    terms: List[Term] = []
    table: Dict[Position, int] = {}
    order: List[FrozenSet[Position]] = []
    steps: List[EliminationStep] = []
    max_steps = len(D)

    while not running.is_zero():
        index = len(order) + 1
        if index > max_steps:
            raise InternalInconsistency(f"Greedy decomposition exceeded {max_steps} steps")

        d = min_degree_sequence(running)
        ratios = {
            (i, di): running.get(i, di) / pure_entry(d, i) for i, di in enumerate(d)
        }
        q = min(ratios.values())
        after = axpy(running, -q, pure_diagram(d))

        zeroed = frozenset(pos for pos in ratios if not after.get(*pos))
        if not zeroed:
            raise InternalInconsistency(f"Step {index} with {d} zeroed no position")
        for (i, j), value in after.items():
            if value < 0:
                raise InternalInconsistency(f"Step {index} made ({i},{j}) negative")

        value = pure = None
        if len(zeroed) == 1:
            (i, j), = zeroed
            value = source.get(i, j)
            pure = pure_entry(d, i)

        logger.debug(f"step {index}: {q} * pi{d} zeroes {sorted(zeroed)}")
        terms.append(Term(q, d))
        order.append(zeroed)
        steps.append(EliminationStep(index, d, q, zeroed, value, pure))
        for pos in zeroed:
            table[pos] = index
        running = after

    record = EliminationRecord(table=table, order=tuple(order), steps=tuple(steps))
    return Decomposition(tuple(terms), D.columns), record


def elimination_order(D: Diagram) -> List[FrozenSet[Position]]:
    _, record = decompose(D)
    return list(record.order)


def has_mass_elimination(D: Diagram) -> bool:
    """True iff some non-final greedy step zeroes two or more positions."""
    _, record = decompose(D)
    return record.has_mass_elimination()


def recompose(dec: Decomposition) -> Diagram:
    """Sum coefficient * pi(sequence) over the terms of a decomposition."""
    total = zero_diagram(dec.columns)
    for coefficient, sequence in dec.terms:
        total = axpy(total, coefficient, pure_diagram(sequence))
    return total


def is_symmetric_decomposition(terms: Sequence[Term]) -> bool:
    """
    Check that terms read the same reversed under the check-dual.

    Sequences are shifted to start at 0 before dualizing.
    """
    n = len(terms)
    for s in range(n):
        coef, seq = terms[s]
        mirror_coef, mirror_seq = terms[n - 1 - s]
        shifted = DegreeSequence(v - seq.first for v in seq)
        mirror = DegreeSequence(v - mirror_seq.first for v in mirror_seq)
        if coef != mirror_coef or shifted != check_dual(mirror):
            return False
    return True


def is_compatible(base: EliminationRecord, extended: EliminationRecord) -> bool:
    """
    Check that an extended elimination order begins with the base order.

    The first m-1 steps must coincide and step m of the extended order must lie
    inside the final step of the base order, m being the base elimination size.
    """
    m = base.size
    if extended.size < m:
        return False
    if any(base.order[k] != extended.order[k] for k in range(m - 1)):
        return False
    return extended.order[m - 1] <= base.order[m - 1]
