"""
Closed forms in codimension three and four.

This module provides the known decomposition of a codimension three complete
intersection, the remainders and ratios of its codimension four extensions
by degeneracy case, and the full codimension four decomposition. Formulas are
kept as sympy expressions in the degrees a1..a4 and evaluated exactly.
"""

import logging
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .assertions import assert_same_terms
from .bs_decomposition import Term, decompose, merge_terms
from .errors import (
    BoundNotMet,
    DegenerateSequence,
    MassEliminationUnsupported,
    NotStrictlyIncreasing,
)
from .koszul import DegreeTuple, betti_ci
from .pure_diagrams import DegreeSequence
from .recursive_decomposition import new_algorithm, stability_bound

logger = logging.getLogger(__name__)

a1, a2, a3, a4 = sympy.symbols("a1 a2 a3 a4", integer=True, positive=True)
A3 = a1 + a2 + a3
A4 = A3 + a4

STRICT = "a1<a2<a3"
TOP_EQUAL = "a1<a2=a3"
BOTTOM_EQUAL = "a1=a2<a3"
ALL_EQUAL = "a1=a2=a3"

CASE1 = "case1"
CASE2 = "case2"

Expr = sympy.Expr
SymbolicTerm = Tuple[Expr, Tuple[Expr, ...]]

CODIM3_TERMS: Tuple[SymbolicTerm, ...] = (
    (a1 * a2 * (a2 + a3), (0, a1, a1 + a2, A3)),
    (a1 * a2 * (a3 - a1), (0, a2, a1 + a2, A3)),
    (2 * a1 * a2 * (a1 + a3 - a2), (0, a2, a1 + a3, A3)),
    (a1 * a2 * (a3 - a1), (0, a3, a1 + a3, A3)),
    (a1 * a2 * (a2 + a3), (0, a3, a2 + a3, A3)),
)

# Remainders of the codimension four extension, one list per degeneracy pattern.
REMAINDERS: Dict[str, Tuple[Expr, ...]] = {
    STRICT: (
        -a1 * a2 * (a2 + a3) ** 2,
        a1 * a2 * (a1 * a2 + 2 * a1 * a3 - a3 ** 2),
        -a1 * a2 * (a1 - a2 + a3) * (a1 + a2 + 4 * a3),
        a1 * a2 * (a1 ** 2 + 4 * a1 * a3 - a2 * a3),
        -a1 ** 2 * a2 * (a2 - 5 * a3),
    ),
    TOP_EQUAL: (
        -4 * a1 * a2 ** 3,
        2 * a1 ** 2 * a2 ** 2 - 2 * a1 * a2 ** 3,
        4 * a1 ** 2 * a2 ** 2,
    ),
    BOTTOM_EQUAL: (
        -2 * a1 ** 2 * a3 ** 2,
        -2 * a1 ** 3 * a3 - 4 * a1 ** 2 * a3 ** 2,
        8 * a1 ** 3 * a3,
    ),
    ALL_EQUAL: (sympy.Integer(0),),
}


def _mirror(terms: Sequence[SymbolicTerm]) -> List[SymbolicTerm]:
    return [
        (coef, tuple(sympy.expand(A4 - v) for v in reversed(seq)))
        for coef, seq in reversed(terms)
    ]


def _case1_terms() -> List[SymbolicTerm]:
    first = [
        (sympy.expand(z * a4 - r), seq + (A4,))
        for (z, seq), r in zip(CODIM3_TERMS, REMAINDERS[STRICT])
    ]
    middle_coef = 6 * a1 * a2 * a3 * (a1 - a3 + a4)
    middle = [
        (middle_coef, (0, a3, a2 + a3, a1 + a2 + a4, A4)),
        (middle_coef, (0, a3, a1 + a4, a1 + a2 + a4, A4)),
    ]
    return first + middle + _mirror(first)


def _case2_terms() -> List[SymbolicTerm]:
    first = [
        (2 * a1 ** 2 * a3 * (a3 + a4), (0, a1, 2 * a1, 2 * a1 + a3, A4)),
        (2 * a1 ** 2 * a3 * (a1 + 2 * a3 + a4), (0, a1, a1 + a3, 2 * a1 + a3, A4)),
        (-2 * a1 ** 2 * a3 * (4 * a1 - a4), (0, a3, a1 + a3, 2 * a1 + a3, A4)),
    ]
    middle_coef = 6 * a1 ** 2 * a3 * (a1 - a3 + a4)
    middle = [
        (middle_coef, (0, a3, a1 + a3, 2 * a1 + a4, A4)),
        (middle_coef, (0, a3, a1 + a4, 2 * a1 + a4, A4)),
    ]
    return first + middle + _mirror(first)


@dataclass(frozen=True)
class ClosedFormDecomposition:
    """
    Evaluated closed-form decomposition.

    Attributes:
        degrees: The degrees the formulas were evaluated at
        case_tag: Degeneracy pattern of (a1, a2, a3), prefixed by the codimension four case
        raw_terms: Every formula term in order, before merging
        terms: Coincident sequences merged, zero terms dropped
        applicability_bound: Bound on the last degree (None in codimension three)
        inclusive: Whether the bound itself is allowed
        certified: Whether the evaluation point satisfies the bound
    """

    degrees: Tuple[int, ...]
    case_tag: str
    raw_terms: Tuple[Term, ...]
    terms: Tuple[Term, ...]
    applicability_bound: Optional[Fraction] = None
    inclusive: bool = False
    certified: bool = True

    @property
    def coefficients(self) -> List[Fraction]:
        return [t.coefficient for t in self.terms]

    @property
    def sequences(self) -> List[DegreeSequence]:
        return [t.sequence for t in self.terms]


@dataclass(frozen=True)
class CaseValues:
    case_tag: str
    values: Tuple[Fraction, ...]


@dataclass(frozen=True)
class RatioReport:
    case_tag: str
    ratios: Tuple[Fraction, ...]
    bound: Fraction
    inclusive: bool

    def admits(self, a_next: int) -> bool:
        """Whether a_next lies in the range where the codimension four closed form applies."""
        return a_next >= self.bound if self.inclusive else a_next > self.bound


def case_tag(d1: int, d2: int, d3: int) -> str:
    """Classify a nondecreasing triple by its equalities."""
    DegreeTuple((d1, d2, d3))
    if d1 == d2 == d3:
        return ALL_EQUAL
    if d1 == d2:
        return BOTTOM_EQUAL
    if d2 == d3:
        return TOP_EQUAL
    return STRICT


def codim4_case(d1: int, d2: int, d3: int) -> str:
    """Case 2 is a1 = a2 < a3; every other pattern is Case 1."""
    return CASE2 if case_tag(d1, d2, d3) == BOTTOM_EQUAL else CASE1


def _to_fraction(expr: Expr, values: Dict) -> Fraction:
    value = sympy.Rational(sympy.sympify(expr).subs(values))
    return Fraction(int(value.p), int(value.q))


def _evaluate(terms: Sequence[SymbolicTerm], values: Dict) -> List[Term]:
    evaluated = []
    for coef, seq in terms:
        entries = [int(sympy.sympify(v).subs(values)) for v in seq]
        try:
            sequence = DegreeSequence(entries)
        except NotStrictlyIncreasing as e:
            raise DegenerateSequence(f"Closed-form sequence {entries} is not increasing") from e
        evaluated.append(Term(_to_fraction(coef, values), sequence))
    return evaluated


def codim3_closed(d1: int, d2: int, d3: int) -> ClosedFormDecomposition:
    """
    Evaluate the codimension three decomposition at (d1, d2, d3).

    The five generic terms are evaluated and merged; under equalities several
    sequences coincide and zero coefficients disappear.
    """
    tag = case_tag(d1, d2, d3)
    raw = _evaluate(CODIM3_TERMS, {a1: d1, a2: d2, a3: d3})
    return ClosedFormDecomposition(
        degrees=(d1, d2, d3),
        case_tag=tag,
        raw_terms=tuple(raw),
        terms=tuple(merge_terms(raw)),
    )


def codim4_remainders(d1: int, d2: int, d3: int) -> CaseValues:
    """Remainders of the codimension four extensions of (d1, d2, d3), by case."""
    tag = case_tag(d1, d2, d3)
    values = {a1: d1, a2: d2, a3: d3}
    return CaseValues(tag, tuple(_to_fraction(r, values) for r in REMAINDERS[tag]))


def codim4_ratios(d1: int, d2: int, d3: int) -> RatioReport:
    """
    Ratios r/z of the remainders to the codimension three coefficients, and the bound.

    Case 2 uses the inclusive bound max(2a1 + a3, 4a1); Case 1 the strict
    bound max(a, r/z).
    """
    remainders = codim4_remainders(d1, d2, d3)
    base = codim3_closed(d1, d2, d3)
    ratios = tuple(r / z for r, z in zip(remainders.values, base.coefficients))
    if remainders.case_tag == BOTTOM_EQUAL:
        return RatioReport(remainders.case_tag, ratios, Fraction(max(2 * d1 + d3, 4 * d1)), True)
    bound = max([Fraction(d1 + d2 + d3)] + list(ratios))
    return RatioReport(remainders.case_tag, ratios, bound, False)


def codim4_symbolic(case: str) -> List[SymbolicTerm]:
    """Unevaluated coefficient and sequence expressions of the given case."""
    if case == CASE1:
        return _case1_terms()
    if case == CASE2:
        return _case2_terms()
    raise ValueError(f"Unknown case {case!r}; expected {CASE1!r} or {CASE2!r}")


def codim4_closed(d1: int, d2: int, d3: int, d4: int) -> ClosedFormDecomposition:
    """
    Evaluate the codimension four decomposition at (d1, d2, d3, d4).

    Below the case bound the evaluation is still returned, marked as not
    certified, and a BoundNotMet warning is issued.

    Raises:
        DegenerateSequence: If an instantiated sequence is not strictly increasing
    """
    DegreeTuple((d1, d2, d3, d4))
    case = codim4_case(d1, d2, d3)
    ratios = codim4_ratios(d1, d2, d3)
    certified = ratios.admits(d4)
    if not certified:
        warnings.warn(
            BoundNotMet(f"a4 = {d4} is outside the {case} range (bound {ratios.bound})")
        )

    raw = _evaluate(codim4_symbolic(case), {a1: d1, a2: d2, a3: d3, a4: d4})
    logger.debug(f"codim4 {case} at {(d1, d2, d3, d4)}: {len(raw)} raw terms")
    return ClosedFormDecomposition(
        degrees=(d1, d2, d3, d4),
        case_tag=f"{case}:{ratios.case_tag}",
        raw_terms=tuple(raw),
        terms=tuple(merge_terms(raw)),
        applicability_bound=ratios.bound,
        inclusive=ratios.inclusive,
        certified=certified,
    )


@dataclass(frozen=True)
class EngineCheck:
    """
    Comparison of a closed form with the greedy and recursive engines.

    Attributes:
        greedy_agrees: The closed form equals the greedy decomposition
        recursive_agrees: The closed form equals the recursive decomposition
            (None when a4 is not above the stability bound of the base or the
            recursive algorithm does not apply)
        failures: Messages of the comparisons that failed
    """

    greedy_agrees: bool
    recursive_agrees: Optional[bool]
    failures: Tuple[str, ...] = ()

    @property
    def agrees(self) -> bool:
        return self.greedy_agrees and self.recursive_agrees is not False


def engine_check(closed: ClosedFormDecomposition) -> EngineCheck:
    """
    Compare an evaluated codimension four closed form with both engines.

    The greedy decomposition of beta(a1, a2, a3, a4) is always compared; the
    recursive decomposition of (a1, a2, a3) + a4 only above its stability bound.
    """
    a = DegreeTuple(closed.degrees)
    base = DegreeTuple(closed.degrees[:-1])
    a4 = closed.degrees[-1]
    failures: List[str] = []

    greedy, _ = decompose(betti_ci(a))
    try:
        assert_same_terms(closed.terms, greedy.terms, f"greedy {a}")
        greedy_agrees = True
    except AssertionError as e:
        failures.append(str(e))
        greedy_agrees = False

    recursive_agrees: Optional[bool] = None
    try:
        if a4 > stability_bound(base):
            report = new_algorithm(base, a4)
            assert_same_terms(closed.terms, report.terms, f"recursive {base} + {a4}")
            recursive_agrees = True
    except (MassEliminationUnsupported, DegenerateSequence) as e:
        logger.info(f"Recursive check skipped for {a}: {e}")
    except AssertionError as e:
        failures.append(str(e))
        recursive_agrees = False

    if failures:
        logger.warning(f"Closed form at {a} disagrees with the engine: {failures}")
    return EngineCheck(greedy_agrees, recursive_agrees, tuple(failures))
