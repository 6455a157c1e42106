"""
Tests for sparse diagrams and their arithmetic.
"""

from fractions import Fraction

import pytest

from bs_decomp.diagram_core import (
    Diagram,
    axpy,
    dual,
    herzog_kuhl_residuals,
    is_pure,
    make_diagram,
    min_degree_sequence,
    reflect,
    twist,
    zero_diagram,
)
from bs_decomp.errors import (
    ColumnCountMismatch,
    ColumnOutOfRange,
    DuplicateEntry,
    EmptyColumn,
    NotStrictlyIncreasing,
)
from bs_decomp.koszul import DegreeTuple, betti_ci
from bs_decomp.pure_diagrams import DegreeSequence, pure_diagram


def test_make_diagram_canonical():
    """Zero values are dropped and the entries are exact rationals."""
    D = make_diagram(4, [(0, 0, 1), (1, 2, 3), (2, 4, 3), (3, 6, 1)])
    assert D.columns == 4
    assert D.get(1, 2) == 3
    assert D.get(1, 3) == 0
    assert len(D) == 4

    assert make_diagram(1, []) == zero_diagram(1)
    assert make_diagram(2, [(1, 3, 0)]) == zero_diagram(2)
    assert make_diagram(2, [(1, 3, Fraction(2, 4))]).get(1, 3) == Fraction(1, 2)


def test_make_diagram_errors():
    """Columns outside range and repeated positions are rejected."""
    with pytest.raises(ColumnOutOfRange):
        make_diagram(2, [(2, 0, 1)])
    with pytest.raises(ColumnOutOfRange):
        make_diagram(2, [(-1, 0, 1)])
    with pytest.raises(DuplicateEntry):
        make_diagram(2, [(0, 0, 1), (0, 0, 2)])


def test_equality_includes_column_count():
    """Diagrams with the same entries but different column counts differ."""
    assert zero_diagram(2) != zero_diagram(3)
    assert make_diagram(3, [(0, 0, 1)]) == make_diagram(3, [(0, 0, 1), (2, 5, 0)])
    assert hash(make_diagram(3, [(0, 0, 1)])) == hash(make_diagram(3, [(0, 0, 1)]))


def test_axpy():
    """axpy cancels exactly and scales pure diagrams."""
    beta = betti_ci(DegreeTuple((2, 2, 2)))
    assert axpy(beta, -1, beta).is_zero()
    assert axpy(beta, -48, pure_diagram((0, 2, 4, 6))).is_zero()

    scaled = axpy(zero_diagram(4), 5, pure_diagram((0, 2, 4, 6)))
    assert [v for _, v in scaled.items()] == [
        Fraction(5, 48), Fraction(5, 16), Fraction(5, 16), Fraction(5, 48)
    ]

    with pytest.raises(ColumnCountMismatch):
        axpy(zero_diagram(3), 1, zero_diagram(4))


def test_dual_and_twist():
    """dual is an involution and twist(-r) undoes twist(r)."""
    D = make_diagram(3, [(0, 0, 1), (1, 3, 2), (2, 7, Fraction(1, 3))])
    assert dual(dual(D)) == D
    assert dual(D).get(2, 0) == 1
    assert dual(D).get(0, -7) == Fraction(1, 3)
    assert dual(zero_diagram(3)) == zero_diagram(3)

    assert twist(D, 2).get(1, 1) == 2
    assert twist(twist(D, 5), -5) == D
    assert twist(zero_diagram(3), 4) == zero_diagram(3)


def test_complete_intersection_is_self_dual():
    """Reflecting beta(2,3,4) through its total degree gives it back."""
    beta = betti_ci(DegreeTuple((2, 3, 4)))
    assert twist(dual(beta), -9) == beta
    assert reflect(beta, 9) == beta


def test_herzog_kuhl_residuals():
    """Residuals vanish below the codimension and the top one is (-1)^c c! prod(a)."""
    assert herzog_kuhl_residuals(betti_ci(DegreeTuple((2, 3, 4))), 2) == [0, 0, 0]
    assert herzog_kuhl_residuals(betti_ci(DegreeTuple((2, 3, 4))), 3)[3] == -144
    assert herzog_kuhl_residuals(betti_ci(DegreeTuple((2, 3))), 2) == [0, 0, 12]
    assert herzog_kuhl_residuals(make_diagram(1, [(0, 0, 1)]), 0) == [1]
    assert herzog_kuhl_residuals(pure_diagram((0, 2, 5, 9)), 2) == [0, 0, 0]


def test_min_degree_sequence():
    """The minimal degrees per column form the sequence used by the greedy step."""
    beta = betti_ci(DegreeTuple((2, 3, 4)))
    assert min_degree_sequence(beta) == DegreeSequence((0, 2, 5, 9))

    with pytest.raises(EmptyColumn) as excinfo:
        min_degree_sequence(make_diagram(3, [(0, 0, 1), (2, 5, 1)]))
    assert excinfo.value.column == 1

    with pytest.raises(NotStrictlyIncreasing):
        min_degree_sequence(make_diagram(2, [(0, 3, 1), (1, 3, 1)]))


def test_is_pure():
    """A pure diagram has one entry per column."""
    assert is_pure(pure_diagram((0, 3, 5)))
    assert is_pure(zero_diagram(2))
    assert not is_pure(betti_ci(DegreeTuple((2, 3))))


def test_operators():
    """The arithmetic operators agree with axpy."""
    P = pure_diagram((0, 1, 2))
    assert P + P == axpy(P, 1, P)
    assert (P - P).is_zero()
    assert -P == axpy(zero_diagram(3), -1, P)
    assert 2 * P == P * 2 == axpy(P, 1, P)
    assert isinstance(P, Diagram)
