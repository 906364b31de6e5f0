"""diracsym: exact verification toolkit for the free Dirac equation.

Gamma-matrix algebra over exact Gaussian rationals, a canonicalizer onto
the 16-monomial basis with a constraint solver, the plane-wave solution
families with their reinterpretation machinery, the discrete symmetry
operator catalog, and Lorentz-component classification, all wired into
reproducible verification suites.
"""

__version__ = "0.1.0"

from .scalars import ComplexRational, parse_rational, rational_sqrt, rational_str
from .matrices import Matrix4C, anticommutator, commutator
from .representations import (
    DIRAC,
    MAJORANA,
    WEYL,
    GammaRepresentation,
    build_representation,
    check_clifford,
    gamma5,
)
from .expr import parse
from .canonical import (
    CanonicalForm,
    CommutationConstraint,
    Relation,
    canonicalize,
    monomial_search,
    relation,
    to_matrix,
)
from .momenta import OnShellMomentum, on_shell, pythagorean_momenta
from .planewave import (
    Family,
    PlaneWaveState,
    evaluate,
    make_state,
    reinterpret_flip,
    s3_check,
    state_to_json,
)
from .residual import Classification, EquationTag, Reading, assemble, classify, residual
from .operators import (
    DiscreteOperator,
    MappingReport,
    apply,
    intertwine_check,
    make_operator,
    pairing_table,
    verify_mapping,
)
from .lorentz import (
    ComponentLabel,
    FourVector,
    LorentzMatrix,
    act,
    boost,
    classify as classify_lorentz,
    component_composition,
    is_lorentz,
    union_is_group,
)
from .report import SuiteReport, emit, run_suite

__all__ = [
    "__version__",
    "ComplexRational",
    "Matrix4C",
    "GammaRepresentation",
    "CanonicalForm",
    "CommutationConstraint",
    "Relation",
    "OnShellMomentum",
    "PlaneWaveState",
    "Family",
    "Classification",
    "EquationTag",
    "Reading",
    "DiscreteOperator",
    "MappingReport",
    "ComponentLabel",
    "FourVector",
    "LorentzMatrix",
    "SuiteReport",
    "DIRAC",
    "MAJORANA",
    "WEYL",
    "anticommutator",
    "apply",
    "assemble",
    "act",
    "boost",
    "build_representation",
    "canonicalize",
    "check_clifford",
    "classify",
    "classify_lorentz",
    "commutator",
    "component_composition",
    "emit",
    "evaluate",
    "gamma5",
    "intertwine_check",
    "is_lorentz",
    "make_operator",
    "make_state",
    "monomial_search",
    "on_shell",
    "pairing_table",
    "parse",
    "parse_rational",
    "pythagorean_momenta",
    "rational_sqrt",
    "rational_str",
    "reinterpret_flip",
    "relation",
    "residual",
    "run_suite",
    "s3_check",
    "state_to_json",
    "to_matrix",
    "union_is_group",
    "verify_mapping",
]
