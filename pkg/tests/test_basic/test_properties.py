"""
Hypothesis-based tests for the algebraic invariants.
"""

from fractions import Fraction
from math import factorial, prod

from hypothesis import assume, given, settings, strategies as st

from bs_decomp.assertions import (
    assert_herzog_kuhl,
    assert_koszul_ranks,
    assert_recomposes,
    assert_zero_diagram,
)
from bs_decomp.bs_decomposition import decompose
from bs_decomp.diagram_core import dual, herzog_kuhl_residuals, make_diagram, reflect, twist
from bs_decomp.errors import DegenerateSequence, MassEliminationUnsupported
from bs_decomp.koszul import DegreeTuple, betti_ci, multiplicity, subset_sum_betti
from bs_decomp.pure_diagrams import check_dual
from bs_decomp.recursive_decomposition import new_algorithm

Tuples = st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4).map(
    lambda degrees: DegreeTuple(tuple(sorted(degrees)))
)
Bases = st.lists(st.integers(min_value=1, max_value=5), min_size=2, max_size=3).map(
    lambda degrees: DegreeTuple(tuple(sorted(degrees)))
)
Entries = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=-5, max_value=12),
        st.fractions(min_value=-10, max_value=10, max_denominator=7),
    ),
    max_size=8,
)
Sequences = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4).map(
    lambda gaps: tuple([0] + [sum(gaps[:k + 1]) for k in range(len(gaps))])
)


@given(Tuples)
def test_koszul_and_subset_sums_agree(a):
    """
    The Koszul construction and subset-sum counting give the same diagram.
    """
    assert betti_ci(a) == subset_sum_betti(a)


@given(Tuples)
def test_complete_intersections_are_self_dual(a):
    """
    Reflecting through the total degree fixes beta(a).
    """
    beta = betti_ci(a)
    assert reflect(beta, a.total) == beta


@given(Tuples)
def test_herzog_kuhl(a):
    """
    The first c power sums vanish and the next one is (-1)^c c! times the product of the degrees.
    """
    beta = betti_ci(a)
    assert_herzog_kuhl(beta, a.c)
    assert_koszul_ranks(beta, a)
    top = herzog_kuhl_residuals(beta, a.c)[a.c]
    assert top == (-1) ** a.c * factorial(a.c) * prod(a.degrees)
    assert multiplicity(a) == prod(a.degrees)


@settings(deadline=None, max_examples=60)
@given(Tuples)
def test_greedy_decomposition_recomposes(a):
    """
    Greedy coefficients are positive and sum back to beta(a).
    """
    beta = betti_ci(a)
    dec, record = decompose(beta)
    assert all(coef > 0 for coef in dec.coefficients)
    assert record.size == len(dec)
    assert_recomposes(beta, dec)


@given(st.integers(min_value=1, max_value=4), Entries, st.integers(min_value=-6, max_value=6))
def test_dual_and_twist_are_invertible(columns, entries, r):
    """
    dual is an involution and twisting by r then -r is the identity.
    """
    unique = {(i % columns, j): v for i, j, v in entries}
    D = make_diagram(columns, [(i, j, v) for (i, j), v in unique.items()])
    assert dual(dual(D)) == D
    assert twist(twist(D, r), -r) == D
    assert (D * Fraction(0)).is_zero()


@given(Sequences)
def test_check_dual_is_an_involution(d):
    """
    check_dual applied twice gives the sequence back.
    """
    assert check_dual(check_dual(d)).values == d


@settings(deadline=None, max_examples=40)
@given(Bases, st.integers(min_value=0, max_value=8))
def test_recursive_runs_recompose(a, offset):
    """
    The recursive algorithm leaves a zero error diagram and its terms form a palindrome.
    """
    a_next = a.largest + offset
    try:
        report = new_algorithm(a, a_next)
    except (MassEliminationUnsupported, DegenerateSequence):
        assume(False)
    assert_zero_diagram(report.error_diagram)
    assert_recomposes(betti_ci(a.extend(a_next)), report.as_decomposition())
    assert report.palindromic
    assert report.symmetric
