"""Skew and linearized Reed-Solomon codes over exact fields.

Construction of skew and linearized Reed-Solomon codes over GF(p^s) and
F_p(z), with exact arithmetic throughout, and brute-force verification at
desk scale that the codes attain the Singleton bound in the skew, Hamming,
rank and sum-rank metrics.
"""

from .codes import (
    BlockLengthError,
    ClosureMismatchError,
    CodeSpec,
    CodeSpecError,
    ConjugateRepsError,
    DependentBetasError,
    DimensionRangeError,
    GeneratorMatrix,
    build_skew_rs,
    pi_change_basis,
)
from .fields import (
    BASE_FIELD,
    FULL_FIELD,
    Field,
    FieldMismatchError,
    FiniteField,
    RationalFunctionField,
    make_field,
)
from .metrics import (
    BlockVector,
    BudgetExceededError,
    DistanceReport,
    OptimalityReport,
    SampleFloorReport,
    hamming_weight,
    min_distance,
    rank_weight,
    sample_weight_floor,
    sum_rank_weight,
    verify_optimal,
)
from .pgeometry import (
    ConjugacyClass,
    DependentPointsError,
    PClosedSet,
    closure_enumerate,
    conjugacy_classes,
    conjugate_of,
    extract_p_basis,
    in_centralizer,
    is_p_independent,
    lagrange_interpolate,
    minimal_skew_poly,
    minimal_skew_poly_nullspace,
    p_rank,
    skew_vandermonde,
    skew_weight,
)
from .skewpoly import SkewPoly, SkewPolyRing

__version__ = "0.1.0"

__all__ = [
    "BASE_FIELD",
    "FULL_FIELD",
    "BlockLengthError",
    "BlockVector",
    "BudgetExceededError",
    "ClosureMismatchError",
    "CodeSpec",
    "CodeSpecError",
    "ConjugacyClass",
    "ConjugateRepsError",
    "DependentBetasError",
    "DependentPointsError",
    "DimensionRangeError",
    "DistanceReport",
    "Field",
    "FieldMismatchError",
    "FiniteField",
    "GeneratorMatrix",
    "OptimalityReport",
    "PClosedSet",
    "RationalFunctionField",
    "SampleFloorReport",
    "SkewPoly",
    "SkewPolyRing",
    "build_skew_rs",
    "closure_enumerate",
    "conjugacy_classes",
    "conjugate_of",
    "extract_p_basis",
    "hamming_weight",
    "in_centralizer",
    "is_p_independent",
    "lagrange_interpolate",
    "make_field",
    "min_distance",
    "minimal_skew_poly",
    "minimal_skew_poly_nullspace",
    "p_rank",
    "pi_change_basis",
    "rank_weight",
    "sample_weight_floor",
    "skew_vandermonde",
    "skew_weight",
    "sum_rank_weight",
    "verify_optimal",
]
