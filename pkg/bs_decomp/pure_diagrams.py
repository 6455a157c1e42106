"""
Degree sequences and pure diagrams.

This module provides the DegreeSequence type, the normalized pure diagram
pi(d), the check-dual of a sequence, concatenation and the chain order.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple

from .diagram_core import Diagram
from .errors import FirstEntryNonzero, LengthMismatch, NotStrictlyIncreasing


@dataclass(frozen=True)
class DegreeSequence:
    """
    Strictly increasing integer sequence (d_0, ..., d_n).

    Raises:
        NotStrictlyIncreasing: If some d_i >= d_{i+1}
    """

    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise NotStrictlyIncreasing("A degree sequence needs at least one entry")
        for k in range(len(values) - 1):
            if values[k] >= values[k + 1]:
                raise NotStrictlyIncreasing(
                    f"Entries {k} and {k + 1} of {values} are not strictly increasing"
                )

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, k: int) -> int:
        return self.values[k]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.values) + ")"

    @property
    def first(self) -> int:
        return self.values[0]

    @property
    def last(self) -> int:
        return self.values[-1]

    def replace(self, k: int, value: int) -> "DegreeSequence":
        """Return a validated copy with entry k set to value."""
        values = list(self.values)
        values[k] = value
        return DegreeSequence(values)


def as_sequence(d: Iterable[int]) -> DegreeSequence:
    return d if isinstance(d, DegreeSequence) else DegreeSequence(tuple(d))


@lru_cache(maxsize=4096)
def _pure_entries(values: Tuple[int, ...]) -> Tuple[Fraction, ...]:
    entries = []
    for i, di in enumerate(values):
        denominator = 1
        for k, dk in enumerate(values):
            if k != i:
                denominator *= abs(di - dk)
        entries.append(Fraction(1, denominator))
    return tuple(entries)


def pure_diagram(d: Iterable[int]) -> Diagram:
    """
    Build the normalized pure diagram pi(d).

    Column i holds prod_{k != i} 1/|d_i - d_k| at degree d_i.

    Args:
        d: Degree sequence (any strictly increasing iterable of integers)

    Returns:
        Diagram with exactly one positive entry per column

    Raises:
        NotStrictlyIncreasing: If d is not a degree sequence
    """
    d = as_sequence(d)
    values = _pure_entries(d.values)
    return Diagram(len(d), {(i, di): values[i] for i, di in enumerate(d)})


def pure_entry(d: DegreeSequence, i: int) -> Fraction:
    """Return the single nonzero value of column i of pi(d)."""
    return _pure_entries(as_sequence(d).values)[i]


def check_dual(e: Iterable[int]) -> DegreeSequence:
    """
    Reflect a degree sequence that starts at 0.

    Entry k of the result is e_last - e_{last-k}.

    Raises:
        FirstEntryNonzero: If e_0 != 0
    """
    e = as_sequence(e)
    if e.first != 0:
        raise FirstEntryNonzero(f"check_dual needs e_0 = 0, got {e}")
    return DegreeSequence(tuple(e.last - v for v in reversed(e.values)))


def concat(d: Iterable[int], N: int) -> DegreeSequence:
    """
    Append N to a degree sequence.

    Raises:
        NotStrictlyIncreasing: If N <= d_last
    """
    d = as_sequence(d)
    if N <= d.last:
        raise NotStrictlyIncreasing(f"Cannot append {N} to {d}")
    return DegreeSequence(d.values + (N,))


def leq(d: Iterable[int], d2: Iterable[int]) -> bool:
    """
    Compare two degree sequences componentwise.

    Raises:
        LengthMismatch: If the sequences have different lengths
    """
    d, d2 = as_sequence(d), as_sequence(d2)
    if len(d) != len(d2):
        raise LengthMismatch(f"Cannot compare {d} with {d2}")
    return all(x <= y for x, y in zip(d, d2))


def is_chain(seqs: Sequence[DegreeSequence]) -> bool:
    """Check that a list of sequences is weakly increasing in the componentwise order."""
    return all(leq(seqs[k], seqs[k + 1]) for k in range(len(seqs) - 1))


def is_symmetric_sequence(d: Iterable[int]) -> bool:
    """Check d_k + d_{n-k} = d_n for every k (d_0 is taken relative to 0)."""
    d = as_sequence(d)
    n = len(d) - 1
    return all(d[k] - d[0] + d[n - k] - d[0] == d[n] - d[0] for k in range(n + 1))
