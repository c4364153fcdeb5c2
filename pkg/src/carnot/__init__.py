"""Exact-arithmetic invariant currents and rectifiability on Carnot groups.

Decides, for translation-invariant currents on stratified nilpotent Lie
groups, the questions that reduce to finite-dimensional algebra: boundaries,
the current/cycle characterization, triviality of current spaces, coverage by
the vertical ideal of forms, and rectifiability via horizontal abelian
subalgebras.  Everything runs over ``fractions.Fraction``; there is no
floating point and no tolerance policy anywhere.
"""

from .algebra import (
    SpecDocumentError,
    StratifiedLieAlgebra,
    ValidationReport,
    Vector,
    Violation,
    load_algebra,
    to_spec_document,
    validate,
)
from .catalog import abelian, build, counterexample_9d, engel, free_step2, heisenberg
from .currents import (
    BoundaryVector,
    InvariantPrecurrent,
    ce_boundary,
    invariant_boundary,
    is_current,
    pushforward_scale,
    restrict_by_dtheta,
    vertical_basis,
)
from .expressions import ExpressionError, format_multivector, format_vector, parse_multivector
from .exterior import (
    MultiCovector,
    MultiVector,
    basis_covector,
    basis_multivector,
    basis_tuples,
    contract,
    dilate_multivector,
    from_vector,
    mc_differential,
    pair,
    to_vector,
    wedge,
)
from .rectifiability import (
    Verdict,
    decompose,
    find_simple_cycle,
    is_purely_unrectifiable,
    nonsimple_cycle_exists,
    plucker_decomposable,
)
from .rumin import (
    Subspace,
    invariant_cycle_space,
    no_invariant_currents,
    vertical_ideal,
    vertical_ideal_covers,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryVector",
    "ExpressionError",
    "InvariantPrecurrent",
    "MultiCovector",
    "MultiVector",
    "SpecDocumentError",
    "StratifiedLieAlgebra",
    "Subspace",
    "ValidationReport",
    "Vector",
    "Verdict",
    "Violation",
    "abelian",
    "basis_covector",
    "basis_multivector",
    "basis_tuples",
    "build",
    "ce_boundary",
    "contract",
    "counterexample_9d",
    "decompose",
    "dilate_multivector",
    "engel",
    "find_simple_cycle",
    "format_multivector",
    "format_vector",
    "free_step2",
    "from_vector",
    "heisenberg",
    "invariant_boundary",
    "invariant_cycle_space",
    "is_current",
    "is_purely_unrectifiable",
    "load_algebra",
    "mc_differential",
    "no_invariant_currents",
    "nonsimple_cycle_exists",
    "pair",
    "parse_multivector",
    "plucker_decomposable",
    "pushforward_scale",
    "restrict_by_dtheta",
    "to_spec_document",
    "to_vector",
    "validate",
    "vertical_basis",
    "vertical_ideal",
    "vertical_ideal_covers",
    "wedge",
]
