"""
bs-decomp - Exact Boij-Soederberg decompositions of complete intersection Betti diagrams.

This package builds Betti diagrams of graded complete intersections, decomposes
them greedily into pure diagrams, and runs the recursive algorithm that
decomposes a codimension c+1 complete intersection from its codimension c base,
together with remainders, stability bounds and closed forms in codimension
three and four.
"""

__version__ = "0.1.0"

from .diagram_core import (
    Diagram,
    make_diagram,
    zero_diagram,
    axpy,
    dual,
    twist,
    reflect,
    herzog_kuhl_residuals,
    min_degree_sequence,
    is_pure,
)
from .pure_diagrams import (
    DegreeSequence,
    pure_diagram,
    check_dual,
    concat,
    leq,
    is_chain,
    is_symmetric_sequence,
)
from .koszul import DegreeTuple, betti_ci, ci_invariants, normalize, subset_sum_betti
from .bs_decomposition import (
    Term,
    Decomposition,
    EliminationRecord,
    decompose,
    elimination_order,
    has_mass_elimination,
    recompose,
)
from .recursive_decomposition import (
    RecursiveReport,
    new_algorithm,
    remainders,
    stability_bound,
    conjecture_phase2,
    stability_report,
)
from .codim4 import codim3_closed, codim4_closed, codim4_ratios, codim4_remainders, engine_check
from .config import EngineConfig, load_config
from .errors import BettiError, BettiWarning, BoundNotMet

__all__ = [
    # Diagrams
    'Diagram',
    'make_diagram',
    'zero_diagram',
    'axpy',
    'dual',
    'twist',
    'reflect',
    'herzog_kuhl_residuals',
    'min_degree_sequence',
    'is_pure',

    # Pure diagrams
    'DegreeSequence',
    'pure_diagram',
    'check_dual',
    'concat',
    'leq',
    'is_chain',
    'is_symmetric_sequence',

    # Complete intersections
    'DegreeTuple',
    'betti_ci',
    'ci_invariants',
    'normalize',
    'subset_sum_betti',

    # Decompositions
    'Term',
    'Decomposition',
    'EliminationRecord',
    'decompose',
    'elimination_order',
    'has_mass_elimination',
    'recompose',
    'RecursiveReport',
    'new_algorithm',
    'remainders',
    'stability_bound',
    'conjecture_phase2',
    'stability_report',

    # Closed forms
    'codim3_closed',
    'codim4_closed',
    'codim4_ratios',
    'codim4_remainders',
    'engine_check',

    # Configuration and errors
    'EngineConfig',
    'load_config',
    'BettiError',
    'BettiWarning',
    'BoundNotMet',
]
