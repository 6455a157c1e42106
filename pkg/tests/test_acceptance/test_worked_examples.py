"""
Worked examples reproduced exactly.

These pin the decompositions of beta(2,3,4), beta(2,3,5,7) and the recursive
decomposition of (2,3,4) + a_4, coefficient by coefficient.
"""

import pytest

from bs_decomp.bs_decomposition import decompose
from bs_decomp.koszul import DegreeTuple, betti_ci
from bs_decomp.pure_diagrams import DegreeSequence
from bs_decomp.recursive_decomposition import new_algorithm, stability_bound
from bs_decomp.reporting import render_elimination_table


def linear_coefficients(a4):
    """The twelve coefficients of (2,3,4) + a4 above the bound, as polynomials in a4."""
    return [
        42 * a4 + 294,
        12 * a4 - 36,
        36 * a4 + 378,
        12 * a4 - 144,
        42 * a4 - 204,
        144 * a4 - 288,
        144 * a4 - 288,
        42 * a4 - 204,
        12 * a4 - 144,
        36 * a4 + 378,
        12 * a4 - 36,
        42 * a4 + 294,
    ]


def test_decompose_234_in_elimination_order(a234):
    """Five terms in the order they are eliminated."""
    dec, _ = decompose(betti_ci(a234))
    assert [(t.coefficient, t.sequence.values) for t in dec.terms] == [
        (42, (0, 2, 5, 9)),
        (12, (0, 3, 5, 9)),
        (36, (0, 3, 6, 9)),
        (12, (0, 4, 6, 9)),
        (42, (0, 4, 7, 9)),
    ]


def test_elimination_table_234(a234):
    """Step indices 1 to 5 in display coordinates."""
    beta = betti_ci(a234)
    _, record = decompose(beta)
    display = {(i, j - i): step for (i, j), step in record.table.items()}
    assert display == {
        (0, 0): 5,
        (1, 1): 1, (1, 2): 3, (1, 3): 5,
        (2, 3): 2, (2, 4): 4, (2, 5): 5,
        (3, 6): 5,
    }
    assert len(render_elimination_table(record, beta.columns).splitlines()) == 2 + 7


def test_mass_elimination_2357():
    """Steps 4 and 6 eliminate two positions each, out of ten steps."""
    _, record = decompose(betti_ci(DegreeTuple((2, 3, 5, 7))))
    assert record.size == 10
    assert record.mass_steps() == [4, 6]
    assert [len(record.order[k]) for k in (3, 5)] == [2, 2]
    assert all(len(record.order[k]) == 1 for k in range(9) if k not in (3, 5))


@pytest.mark.parametrize("a4", [13, 20])
def test_recursive_234_follows_linear_coefficients(a234, a4):
    """Above the bound every coefficient is the linear polynomial evaluated at a4."""
    report = new_algorithm(a234, a4)
    assert len(report.terms) == 12
    assert report.coefficients == linear_coefficients(a4)
    assert report.error_diagram.is_zero()
    assert report.sequences[-1] == DegreeSequence((0, a4, a4 + 4, a4 + 7, a4 + 9))


def test_stability_bound_234(a234):
    """The bound is exactly 12."""
    assert stability_bound(a234) == 12


def test_recursive_234_at_and_below_bound(a234):
    """At the bound y_4 and y_9 vanish; below it a coefficient is negative while E stays zero."""
    at_bound = new_algorithm(a234, 12)
    assert at_bound.coefficients[3] == at_bound.coefficients[8] == 0

    below = new_algorithm(a234, 11)
    assert min(below.coefficients) < 0
    assert below.error_diagram.is_zero()
