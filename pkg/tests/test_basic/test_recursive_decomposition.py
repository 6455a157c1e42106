"""
Tests for the recursive three-phase decomposition.
"""

from fractions import Fraction

import pytest

from bs_decomp.assertions import assert_palindromic, assert_recomposes, assert_symmetric_terms
from bs_decomp.bs_decomposition import Term, merge_terms
from bs_decomp.diagram_core import make_diagram
from bs_decomp.errors import (
    ANextTooSmall,
    BoundNotMet,
    CodimensionTooSmall,
    MassEliminationUnsupported,
)
from bs_decomp.koszul import DegreeTuple, betti_ci
from bs_decomp.pure_diagrams import DegreeSequence
from bs_decomp.recursive_decomposition import (
    SAMPLE_OFFSETS,
    conjecture_phase2,
    new_algorithm,
    phase2_target,
    predicted_phase2,
    ratios,
    remainders,
    stability_bound,
    stability_report,
    split_repeated,
)

SEQUENCES_234_13 = [
    (0, 2, 5, 9, 22),
    (0, 3, 5, 9, 22),
    (0, 3, 6, 9, 22),
    (0, 4, 6, 9, 22),
    (0, 4, 7, 9, 22),
    (0, 4, 7, 18, 22),
    (0, 4, 15, 18, 22),
    (0, 13, 15, 18, 22),
    (0, 13, 16, 18, 22),
    (0, 13, 16, 19, 22),
    (0, 13, 17, 19, 22),
    (0, 13, 17, 20, 22),
]


def test_recursive_234_13(a234):
    """The twelve-term decomposition of (2,3,4,13)."""
    report = new_algorithm(a234, 13)
    assert report.coefficients == [840, 120, 846, 12, 342, 1584, 1584, 342, 12, 846, 120, 840]
    assert report.sequences == [DegreeSequence(s) for s in SEQUENCES_234_13]
    assert report.phase_boundaries == (5, 7)
    assert report.error_diagram.is_zero()
    assert report.stability_bound == 12
    assert report.targets[0] == (1, 2)
    assert report.targets[4] == (3, 9)
    assert report.targets[5] == (2, 7)
    assert report.is_chain
    assert report.all_positive
    assert report.agrees_with_standard
    assert report.compatible_order
    assert report.symmetric
    assert report.palindromic
    assert report.independent
    assert report.zero_indices == []
    assert report.extended == DegreeTuple((2, 3, 4, 13))
    assert_recomposes(betti_ci(report.extended), report.as_decomposition())
    assert_palindromic(report.terms)


def test_coefficients_are_linear_in_a_next(a234):
    """Above the bound y_s = z_s * a_next - r_s and the Phase-2 terms are 144 a_next - 288."""
    for a_next in (13, 20):
        report = new_algorithm(a234, a_next)
        y = report.coefficients
        assert y[0] == 42 * a_next + 294
        assert y[4] == 42 * a_next - 204
        assert y[5] == y[6] == 144 * a_next - 288
        assert y == list(reversed(y))


def test_zero_and_negative_coefficients(a234):
    """At the bound two terms vanish; below it a coefficient turns negative while E stays zero."""
    at_bound = new_algorithm(a234, 12)
    assert at_bound.zero_indices == [4, 9]
    assert at_bound.error_diagram.is_zero()
    assert not at_bound.all_positive

    below = new_algorithm(a234, 11)
    assert below.error_diagram.is_zero()
    assert any(y < 0 for y in below.coefficients)
    assert not below.agrees_with_standard


def test_no_phase_two_when_a_next_equals_a_c():
    """(1,2) extended by 2 skips Phase 2, repeats a sequence and splits its coefficient evenly."""
    report = new_algorithm(DegreeTuple((1, 2)), 2)
    assert report.phase_boundaries == (2, 2)
    assert report.coefficients == [8, 4, 4, 8]
    assert report.sequences == [
        DegreeSequence((0, 1, 3, 5)),
        DegreeSequence((0, 2, 3, 5)),
        DegreeSequence((0, 2, 3, 5)),
        DegreeSequence((0, 2, 4, 5)),
    ]
    assert report.zero_indices == []
    assert report.all_positive
    assert report.error_diagram.is_zero()
    assert report.symmetric
    assert report.independent
    assert report.palindromic
    assert report.agrees_with_standard
    assert_palindromic(report.terms)
    assert_symmetric_terms(report.terms)


def test_repeated_sequences_at_a_next_equal_to_a_c(a234):
    """(2,3,4) extended by 4 repeats its middle sequences and shares their coefficients evenly."""
    report = new_algorithm(a234, 4)
    assert report.phase_boundaries == (5, 5)
    assert report.coefficients == [462, 12, 522, 78, 78, 78, 78, 522, 12, 462]
    assert report.error_diagram.is_zero()
    assert report.palindromic
    assert_palindromic(report.terms)


def test_codimension_two_chain():
    """For c = 2 every run is a chain with zero error diagram."""
    for degrees in [(1, 1), (1, 2), (2, 3), (3, 5)]:
        a = DegreeTuple(degrees)
        for a_next in range(a.largest, a.total + 5):
            report = new_algorithm(a, a_next)
            assert report.error_diagram.is_zero()
            assert report.is_chain


def test_preconditions(a234):
    """Codimension one, small a_next and mass elimination are rejected."""
    with pytest.raises(CodimensionTooSmall):
        new_algorithm(DegreeTuple((3,)), 4)
    with pytest.raises(ANextTooSmall):
        new_algorithm(a234, 3)
    with pytest.raises(MassEliminationUnsupported):
        new_algorithm(DegreeTuple((2, 3, 5, 7)), 9)
    with pytest.raises(MassEliminationUnsupported):
        remainders(DegreeTuple((2, 3, 5, 7)))


@pytest.mark.parametrize("degrees, expected_r, expected_bound", [
    ((2, 3, 4), [-294, 36, -378, 144, 204], 12),
    ((2, 3, 3), [-216, -36, 144], 8),
    ((2, 2, 5), [-200, -480, 320], 9),
    ((1, 2, 3), [-50, -2, -60, 14, 26], 6),
    ((1, 1), [0], 2),
])
def test_remainders_and_bound(degrees, expected_r, expected_bound):
    """Remainders and bounds of small bases."""
    a = DegreeTuple(degrees)
    assert remainders(a) == expected_r
    assert stability_bound(a) == expected_bound


def test_ratios(a234):
    """r_s / z_s for (2,3,4)."""
    assert ratios(a234) == [-7, 3, Fraction(-21, 2), 12, Fraction(34, 7)]


def test_predicted_phase2(a234):
    """The conjectured Phase-2 coefficient for (2,3,4)."""
    assert predicted_phase2(a234, 13, 1) == 1584
    assert predicted_phase2(a234, 13, 2) == 1584
    assert predicted_phase2(a234, 20, 1) == 144 * 20 - 288


def test_conjecture_phase2(a234):
    """Above the bound the conjecture holds; below it a warning is issued."""
    report = conjecture_phase2(a234, 13)
    assert report.within_hypothesis
    assert report.holds
    assert [row.s for row in report.rows] == [6, 7]

    with pytest.warns(BoundNotMet):
        below = conjecture_phase2(a234, 10)
    assert not below.within_hypothesis


def test_stability_report(a234):
    """Samples above the bound keep the term count and the coefficients are linear."""
    report = stability_report(a234, 13)
    assert report.samples == tuple(12 + offset for offset in SAMPLE_OFFSETS) == (13, 20, 31)
    assert report.term_count == report.expected_terms == 12
    assert report.sample_term_counts == (12, 12, 12)
    assert report.compatible_order
    assert report.stable_term_count
    assert report.linear
    assert report.order_stable
    first = report.fits[0]
    assert (first.slope, first.intercept) == (42, 294)
    assert str(first) == "42*x + 294"
    assert len(report.fits) == 10

    below = stability_report(a234, 6)
    assert not below.compatible_order


def test_phase2_target_leaves_lower_entries():
    """A Phase-2 step aims at (column, e_column) even when the column holds smaller degrees."""
    running = make_diagram(4, [(0, 0, 1), (2, 5, 3), (2, 7, -2), (2, 9, 4), (3, 9, 1)])
    e = DegreeSequence((0, 2, 7, 9))
    target, lower = phase2_target(running, e, 2)
    assert target == (2, 7)
    assert lower == [5]

    target, lower = phase2_target(running, e, 3)
    assert target == (3, 9)
    assert lower == []


def test_phase2_targets_of_234_13(a234):
    """Each Phase-2 step k of (2,3,4) + 13 targets (c-k, e_{c-k})."""
    report = new_algorithm(a234, 13)
    m, phase2_end = report.phase_boundaries
    for s in range(m + 1, phase2_end + 1):
        column = a234.c - (s - m)
        assert report.targets[s - 1] == (column, report.sequences[s - 1][column])


def test_split_repeated():
    """Repeated sequences share their total; distinct ones are untouched."""
    first = DegreeSequence((0, 1, 3, 5))
    middle = DegreeSequence((0, 2, 3, 5))
    last = DegreeSequence((0, 2, 4, 5))
    terms = [
        Term(Fraction(8), first),
        Term(Fraction(8), middle),
        Term(Fraction(0), middle),
        Term(Fraction(8), last),
    ]
    split = split_repeated(terms)
    assert [t.coefficient for t in split] == [8, 4, 4, 8]
    assert [t.sequence for t in split] == [first, middle, middle, last]
    assert merge_terms(split) == merge_terms(terms)
