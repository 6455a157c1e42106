"""
Betti diagrams of complete intersections.

This module provides the DegreeTuple type and builds the Koszul Betti diagram
of a complete intersection: beta_{i,j} counts the i-element index subsets of the
generator degrees that sum to j.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import Iterable, List, Tuple

from .diagram_core import Diagram
from .errors import EmptyTuple, NonPositiveDegree, NotNondecreasing

# Largest codimension the brute-force subset enumerator accepts.
MAX_ENUMERATION_CODIM = 20


@dataclass(frozen=True)
class DegreeTuple:
    """
    Nondecreasing positive generator degrees (a_1, ..., a_c).

    Use normalize() to build one from unsorted input.
    """

    degrees: Tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(a) for a in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if not degrees:
            raise EmptyTuple("A degree tuple needs at least one degree")
        for a in degrees:
            if a < 1:
                raise NonPositiveDegree(f"Degree {a} is not positive")
        if list(degrees) != sorted(degrees):
            raise NotNondecreasing(f"Degrees {degrees} are not nondecreasing")

    @property
    def c(self) -> int:
        return len(self.degrees)

    @property
    def total(self) -> int:
        """The sum a of all generator degrees."""
        return sum(self.degrees)

    @property
    def largest(self) -> int:
        return self.degrees[-1]

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __getitem__(self, k: int) -> int:
        return self.degrees[k]

    def __str__(self) -> str:
        return "(" + ",".join(str(a) for a in self.degrees) + ")"

    def extend(self, a_next: int) -> "DegreeTuple":
        """Append a degree; a_next must be at least the largest degree."""
        return DegreeTuple(self.degrees + (a_next,))


def normalize(raw: Iterable[int]) -> DegreeTuple:
    """
    Sort raw degrees into a DegreeTuple.

    Raises:
        EmptyTuple: If no degrees are given
        NonPositiveDegree: If a degree is below 1
    """
    degrees = [int(a) for a in raw]
    if not degrees:
        raise EmptyTuple("A degree tuple needs at least one degree")
    for a in degrees:
        if a < 1:
            raise NonPositiveDegree(f"Degree {a} is not positive")
    return DegreeTuple(tuple(sorted(degrees)))


@lru_cache(maxsize=1024)
def _koszul_counts(degrees: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, int], int], ...]:
    # Coefficients of prod_k (1 + T x^{a_k}), one factor at a time.
    poly: Counter = Counter({(0, 0): 1})
    for a in degrees:
        step: Counter = Counter(poly)
        for (i, j), count in poly.items():
            step[(i + 1, j + a)] += count
        poly = step
    return tuple(sorted(poly.items()))


def betti_ci(a: DegreeTuple) -> Diagram:
    """
    Compute the Betti diagram of the complete intersection with degrees a.

    Args:
        a: Generator degrees

    Returns:
        Diagram with c+1 columns
    """
    counts = _koszul_counts(a.degrees)
    return Diagram(a.c + 1, dict(counts))


def subset_sum_betti(a: DegreeTuple) -> Diagram:
    """
    Count index subsets directly; only meant as a cross-check for betti_ci.

    Raises:
        ValueError: If the codimension exceeds MAX_ENUMERATION_CODIM
    """
    if a.c > MAX_ENUMERATION_CODIM:
        raise ValueError(f"Refusing to enumerate 2^{a.c} subsets")
    counts: Counter = Counter()
    for i in range(a.c + 1):
        for subset in itertools.combinations(a.degrees, i):
            counts[(i, sum(subset))] += 1
    return Diagram(a.c + 1, dict(counts))


def ci_invariants(a: DegreeTuple) -> Tuple[int, int]:
    """Return (projective dimension, regularity) = (c, a - c)."""
    return a.c, a.total - a.c


def koszul_ranks(a: DegreeTuple) -> List[int]:
    """Ranks of the Koszul modules: binomial(c, i) for i = 0..c."""
    return [comb(a.c, i) for i in range(a.c + 1)]


def multiplicity(a: DegreeTuple) -> int:
    return prod(a.degrees)
