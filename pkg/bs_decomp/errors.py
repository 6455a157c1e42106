"""
Error types for bs-decomp.

This module provides the exception hierarchy raised by the engine. Errors that
signal bad input also derive from ValueError so callers can catch either.
"""

from typing import Optional


class BettiError(Exception):
    """Base class for every error raised by the engine."""


class BettiWarning(UserWarning):
    """Base class for non-fatal conditions reported through the warnings module."""


# Diagram construction and arithmetic

class ColumnOutOfRange(BettiError, ValueError):
    """An entry refers to a column outside 0..n."""


class DuplicateEntry(BettiError, ValueError):
    """The same (column, degree) position was given twice."""


class ColumnCountMismatch(BettiError, ValueError):
    """Two diagrams with different column counts were combined."""


class EmptyColumn(BettiError):
    """
    A column of the diagram has no nonzero entry.

    Attributes:
        column: Index of the empty column, if known
    """

    def __init__(self, message: str, column: Optional[int] = None):
        super().__init__(message)
        self.column = column


# Degree sequences and tuples

class NotStrictlyIncreasing(BettiError, ValueError):
    """A degree sequence is not strictly increasing."""


class FirstEntryNonzero(BettiError, ValueError):
    """The check-dual of a sequence needs the sequence to start at 0."""


class LengthMismatch(BettiError, ValueError):
    """Two degree sequences of different length were compared."""


class EmptyTuple(BettiError, ValueError):
    """A degree tuple with no degrees."""


class NonPositiveDegree(BettiError, ValueError):
    """A generator degree below 1."""


class NotNondecreasing(BettiError, ValueError):
    """A degree tuple built directly from unsorted degrees."""


# Decomposition

class NegativeEntry(BettiError, ValueError):
    """The diagram handed to the greedy decomposition has a negative entry."""


class CodimensionTooSmall(BettiError, ValueError):
    """The recursive algorithm needs a base of codimension at least 2."""


class MassEliminationUnsupported(BettiError):
    """The base decomposition zeroes several positions in a non-final step."""


class ANextTooSmall(BettiError, ValueError):
    """The appended degree is smaller than the largest base degree."""


class DegenerateSequence(BettiError):
    """A generated degree sequence is invalid or the sequences do not cover the diagram."""


class InternalInconsistency(BettiError):
    """An identity that must hold for exact arithmetic was violated."""


class BoundNotMet(BettiWarning):
    """A closed form or conjecture check was evaluated below its validity bound."""
