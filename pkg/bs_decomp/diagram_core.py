"""
Sparse exact Betti diagrams.

This module provides the Diagram value type together with the arithmetic,
duality, twisting and shape queries the decomposition algorithms are built on.
Entries are keyed by (column i, degree j); the conventional j-i row index is
only used when rendering.
"""

import logging
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import ColumnCountMismatch, ColumnOutOfRange, DuplicateEntry, EmptyColumn

logger = logging.getLogger(__name__)

Position = Tuple[int, int]
RationalLike = Union[int, Fraction]


class Diagram:
    """
    Immutable sparse table of rationals indexed by (column, degree).

    Zero values are never stored, so two diagrams are equal exactly when their
    column counts and stored entries agree.
    """

    __slots__ = ("_columns", "_entries", "_hash")

    def __init__(self, columns: int, entries: Optional[Mapping[Position, RationalLike]] = None):
        """
        Initialize a diagram.

        Args:
            columns: Number of columns n+1
            entries: Mapping from (i, j) to value; zero values are dropped

        Raises:
            ColumnOutOfRange: If an entry lies outside columns 0..n
        """
        if columns < 1:
            raise ColumnOutOfRange(f"A diagram needs at least one column, got {columns}")

        canonical: Dict[Position, Fraction] = {}
        for (i, j), value in (entries or {}).items():
            if not 0 <= i < columns:
                raise ColumnOutOfRange(f"Column {i} outside 0..{columns - 1}")
            value = Fraction(value)
            if value:
                canonical[(i, j)] = value

        self._columns = columns
        self._entries = MappingProxyType(canonical)
        self._hash: Optional[int] = None

    @property
    def columns(self) -> int:
        return self._columns

    @property
    def n(self) -> int:
        """Index of the last column."""
        return self._columns - 1

    def get(self, i: int, j: int) -> Fraction:
        return self._entries.get((i, j), Fraction(0))

    def __getitem__(self, position: Position) -> Fraction:
        return self.get(*position)

    def items(self) -> Iterator[Tuple[Position, Fraction]]:
        """Iterate over nonzero entries in (column, degree) order."""
        for key in sorted(self._entries):
            yield key, self._entries[key]

    def support(self) -> frozenset:
        return frozenset(self._entries)

    def column(self, i: int) -> Dict[int, Fraction]:
        """Return the nonzero entries of column i as a degree -> value map."""
        return {j: v for (k, j), v in self._entries.items() if k == i}

    def is_zero(self) -> bool:
        return not self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Diagram):
            return NotImplemented
        return self._columns == other._columns and dict(self._entries) == dict(other._entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._columns, frozenset(self._entries.items())))
        return self._hash

    def __add__(self, other: "Diagram") -> "Diagram":
        return axpy(self, Fraction(1), other)

    def __sub__(self, other: "Diagram") -> "Diagram":
        return axpy(self, Fraction(-1), other)

    def __neg__(self) -> "Diagram":
        return scale(self, Fraction(-1))

    def __mul__(self, q: RationalLike) -> "Diagram":
        return scale(self, q)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {v}" for (i, j), v in self.items())
        return f"Diagram(columns={self._columns}, {{{body}}})"


def make_diagram(columns: int, entries: Iterable[Tuple[int, int, RationalLike]]) -> Diagram:
    """
    Build a diagram from (i, j, value) triples.

    Args:
        columns: Number of columns n+1
        entries: Triples (column, degree, value)

    Returns:
        Canonical sparse diagram with zero values dropped

    Raises:
        ColumnOutOfRange: If some i is not in 0..columns-1
        DuplicateEntry: If a position occurs twice
    """
    table: Dict[Position, RationalLike] = {}
    for i, j, value in entries:
        if not 0 <= i < columns:
            raise ColumnOutOfRange(f"Column {i} outside 0..{columns - 1}")
        if (i, j) in table:
            raise DuplicateEntry(f"Position ({i},{j}) given more than once")
        table[(i, j)] = value
    return Diagram(columns, table)


def zero_diagram(columns: int) -> Diagram:
    return Diagram(columns)


def scale(D: Diagram, q: RationalLike) -> Diagram:
    q = Fraction(q)
    return Diagram(D.columns, {key: q * v for key, v in D.items()})


def axpy(D: Diagram, q: RationalLike, P: Diagram) -> Diagram:
    """
    Compute D + q*P.

    Args:
        D: Diagram to add to
        q: Rational multiplier (negative to subtract)
        P: Diagram to scale

    Returns:
        The entrywise sum in canonical form

    Raises:
        ColumnCountMismatch: If D and P have different column counts
    """
    if D.columns != P.columns:
        raise ColumnCountMismatch(f"Cannot combine {D.columns} columns with {P.columns}")
    q = Fraction(q)
    entries: Dict[Position, Fraction] = dict(D.items())
    if q:
        for key, value in P.items():
            entries[key] = entries.get(key, Fraction(0)) + q * value
    return Diagram(D.columns, entries)


def dual(D: Diagram) -> Diagram:
    """Return the dual diagram, whose (i, j) entry is D[n-i, -j]."""
    n = D.n
    return Diagram(D.columns, {(n - i, -j): v for (i, j), v in D.items()})


def twist(D: Diagram, r: int) -> Diagram:
    """Return the twist D(r), whose (i, j) entry is D[i, r+j]."""
    return Diagram(D.columns, {(i, j - r): v for (i, j), v in D.items()})


def reflect(D: Diagram, shift: int) -> Diagram:
    """
    Reflect a diagram through its column and degree ranges.

    The (i, j) entry of the result is D[n-i, shift-j]; this is twist(dual(D), -shift).
    A complete intersection diagram is fixed by the reflection with shift equal to
    the sum of its generator degrees.
    """
    return twist(dual(D), -shift)


def herzog_kuhl_residuals(D: Diagram, c: int) -> List[Fraction]:
    """
    Compute the alternating power sums sum_{i,j} (-1)^i j^t D[i,j] for t = 0..c.

    Args:
        D: Diagram to evaluate
        c: Highest exponent

    Returns:
        List of c+1 rationals (0**0 is taken as 1)
    """
    residuals = []
    for t in range(c + 1):
        total = Fraction(0)
        for (i, j), value in D.items():
            term = value * j ** t
            total += -term if i % 2 else term
        residuals.append(total)
    return residuals


def min_degree_sequence(D: Diagram):
    """
    Identify the minimal degree sequence of a diagram.

    Args:
        D: Diagram with a nonzero entry in every column

    Returns:
        DegreeSequence whose i-th entry is the least j with D[i, j] != 0

    Raises:
        EmptyColumn: If some column has no nonzero entry
        NotStrictlyIncreasing: If the minima do not increase strictly
    """
    from .pure_diagrams import DegreeSequence

    minima: Dict[int, int] = {}
    for (i, j), _ in D.items():
        if i not in minima or j < minima[i]:
            minima[i] = j

    for i in range(D.columns):
        if i not in minima:
            raise EmptyColumn(f"Column {i} has no nonzero entry", column=i)

    return DegreeSequence(minima[i] for i in range(D.columns))


def is_pure(D: Diagram) -> bool:
    """Check whether every column holds at most one nonzero entry."""
    seen = set()
    for (i, _), _ in D.items():
        if i in seen:
            return False
        seen.add(i)
    return True
