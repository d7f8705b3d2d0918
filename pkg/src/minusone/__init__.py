"""Exact-arithmetic toolkit for (-1)-curve classes on blowups of the plane.

Divisor classes ``d*H - sum(m_i E_i)`` are classified as (-1)-classes by two
independent procedures (quadratic-transformation descent and an inductive
smaller-degree criterion), enumerated exhaustively per degree, and applied
to detect obstructions to the expected dimension of plane interpolation
systems with assigned multiplicities.
"""
from .classify import (
    Certificate,
    ConditionFailure,
    EnumerationTable,
    ExceptionalTerminal,
    ObstructingCurve,
    TableCoverageError,
    Verdict,
    enumerate_candidates,
    enumerate_minus_one,
    is_minus_one_descent,
    is_minus_one_inductive,
    min_intersection_sorted,
    min_intersection_witness,
    solve_sum_and_squares,
)
from .cremona import (
    ConditionError,
    HypothesisFailure,
    NegativeMultiplicity,
    NoetherHypothesisError,
    ReachedExceptional,
    ReductionStep,
    ReductionTrace,
    TripleIndex,
    apply_cremona,
    descend,
    noether_triple,
    transport_witness,
)
from .interpolation import (
    LinearSystem,
    Obstruction,
    ObstructionReport,
    analyze_system,
    expected_dim,
)
from .picard import (
    ConditionSet,
    DivisorClass,
    SurfaceContext,
    anticanonical_degree,
    arithmetic_genus,
    canonical_class,
    condition_set,
    exceptional_class,
    expand_permutations,
    expected_dimension,
    intersect,
    orbit_size,
    sorted_canonical_form,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "ConditionError",
    "ConditionFailure",
    "ConditionSet",
    "DivisorClass",
    "EnumerationTable",
    "ExceptionalTerminal",
    "HypothesisFailure",
    "LinearSystem",
    "NegativeMultiplicity",
    "NoetherHypothesisError",
    "Obstruction",
    "ObstructionReport",
    "ObstructingCurve",
    "ReachedExceptional",
    "ReductionStep",
    "ReductionTrace",
    "SurfaceContext",
    "TableCoverageError",
    "TripleIndex",
    "Verdict",
    "analyze_system",
    "anticanonical_degree",
    "apply_cremona",
    "arithmetic_genus",
    "canonical_class",
    "condition_set",
    "descend",
    "enumerate_candidates",
    "enumerate_minus_one",
    "exceptional_class",
    "expand_permutations",
    "expected_dim",
    "expected_dimension",
    "intersect",
    "is_minus_one_descent",
    "is_minus_one_inductive",
    "min_intersection_sorted",
    "min_intersection_witness",
    "noether_triple",
    "orbit_size",
    "solve_sum_and_squares",
    "sorted_canonical_form",
    "transport_witness",
]
