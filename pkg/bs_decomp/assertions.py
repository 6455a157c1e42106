"""
Custom assertions for Betti diagrams and decompositions.

This module provides specialized assertions that simplify validating
decompositions, both in the test suite and in the property sweep, where a
failed assertion is reported as a counterexample.
"""

from collections import Counter
from typing import Optional, Sequence

from .bs_decomposition import Decomposition, Term, merge_terms, recompose
from .diagram_core import Diagram, herzog_kuhl_residuals
from .koszul import DegreeTuple, koszul_ranks
from .pure_diagrams import DegreeSequence, check_dual, leq


def _describe(terms: Sequence[Term], limit: int = 6) -> str:
    shown = ", ".join(str(t) for t in terms[:limit])
    if len(terms) > limit:
        shown += f" and {len(terms) - limit} more"
    return shown


def assert_recomposes(D: Diagram, dec: Decomposition) -> None:
    """
    Assert that the terms of a decomposition sum exactly to a diagram.

    Args:
        D: The diagram that was decomposed
        dec: Its decomposition

    Raises:
        AssertionError: If the weighted sum of pure diagrams differs from D
    """
    rebuilt = recompose(dec)
    if rebuilt != D:
        difference = D - rebuilt
        raise AssertionError(
            f"Decomposition does not recompose the diagram; difference has entries {dict(difference.items())}"
        )


def assert_zero_diagram(E: Diagram, label: str = "error diagram") -> None:
    """
    Assert that a diagram has no nonzero entry.

    Raises:
        AssertionError: Listing the surviving entries
    """
    if not E.is_zero():
        raise AssertionError(f"The {label} is nonzero: {dict(E.items())}")


def assert_chain(sequences: Sequence[DegreeSequence]) -> None:
    """
    Assert that consecutive degree sequences weakly increase componentwise.

    Raises:
        AssertionError: Naming the first pair out of order
    """
    for k in range(len(sequences) - 1):
        if not leq(sequences[k], sequences[k + 1]):
            raise AssertionError(
                f"Sequences {k + 1} and {k + 2} are not a chain: {sequences[k]} vs {sequences[k + 1]}"
            )


def assert_symmetric_terms(terms: Sequence[Term]) -> None:
    """
    Assert that merged coefficients agree on check-dual pairs of sequences.

    Sequences must start at 0.

    Raises:
        AssertionError: Naming the first sequence whose partner has a different coefficient
    """
    merged = {seq: coef for coef, seq in merge_terms(terms)}
    for seq, coef in merged.items():
        partner = check_dual(seq)
        partner_coef = merged.get(partner, 0)
        if partner_coef != coef:
            raise AssertionError(
                f"{coef} * pi{seq} is not matched by its dual {partner} (coefficient {partner_coef})"
            )


def assert_palindromic(terms: Sequence[Term]) -> None:
    """
    Assert y_s = y_{N+1-s} and e^s = check_dual(e^{N+1-s}) for all s.

    Raises:
        AssertionError: Naming the first index that breaks the palindrome
    """
    N = len(terms)
    for s in range(N):
        left, right = terms[s], terms[N - 1 - s]
        if left.coefficient != right.coefficient or left.sequence != check_dual(right.sequence):
            raise AssertionError(f"Terms {s + 1} and {N - s} are not mirror images: {left} vs {right}")


def assert_same_terms(
    actual: Sequence[Term], expected: Sequence[Term], label: Optional[str] = None
) -> None:
    """
    Assert two term lists agree as multisets after merging and dropping zeros.

    Raises:
        AssertionError: Listing the terms found on one side only
    """
    left = Counter((t.coefficient, t.sequence) for t in merge_terms(actual))
    right = Counter((t.coefficient, t.sequence) for t in merge_terms(expected))
    if left != right:
        extra = [Term(coef, seq) for coef, seq in (left - right).elements()]
        missing = [Term(coef, seq) for coef, seq in (right - left).elements()]
        prefix = f"{label}: " if label else ""
        raise AssertionError(
            f"{prefix}unexpected terms [{_describe(extra)}]; missing terms [{_describe(missing)}]"
        )


def assert_herzog_kuhl(D: Diagram, c: int) -> None:
    """
    Assert the alternating power sums of D vanish for exponents 0..c-1.

    Raises:
        AssertionError: Listing the nonzero residuals
    """
    residuals = herzog_kuhl_residuals(D, c - 1)
    nonzero = {t: r for t, r in enumerate(residuals) if r}
    if nonzero:
        raise AssertionError(f"Herzog-Kuhl residuals do not vanish: {nonzero}")


def assert_koszul_ranks(D: Diagram, a: DegreeTuple) -> None:
    """
    Assert the column sums of D are the binomial coefficients binom(c, i).

    Raises:
        AssertionError: Naming the first column with the wrong total
    """
    for i, expected in enumerate(koszul_ranks(a)):
        total = sum(D.column(i).values())
        if total != expected:
            raise AssertionError(f"Column {i} of beta{a} sums to {total}, expected {expected}")
