"""Exact calculus for weighted pro-p group presentations.

The package computes, in exact rational arithmetic, the free-derivative
relation matrix of a finitely presented group with weighted generators,
the gcds of its minor ideals, the rational and p-adic zeros of those
gcds, the crossed-homomorphism spaces attached to each zero, explicit
block-triangular extensions of a representation by such a crossed
homomorphism, and the resulting cocycle/coboundary/quotient dimensions.
"""

from .cohomology import (
    CohomologyReport,
    SymSquareReport,
    TheoremAudit,
    coboundary_matrix,
    fixed_space,
    h1_report,
    is_coboundary,
    symmetric_square_cocycle,
    theorem_audit,
)
from .errors import (
    DivisionByZero,
    DuplicateGenerator,
    GoldenMismatch,
    HypothesisViolated,
    IdenticallyZero,
    InternalInconsistency,
    NotACocycle,
    NotAUnit,
    NotInvertible,
    ParseError,
    PropfoxError,
    TheoremViolation,
    UnknownGenerator,
    UsageError,
    ZeroExponent,
)
from .extensions import (
    CocycleSpace,
    CrossedHom,
    ExtensionCandidate,
    ExtensionCount,
    RelatorCheck,
    SpecializedRep,
    VerificationReport,
    build_extension,
    cocycle_space,
    evaluate_cocycle,
    extension_count_criterion,
    specialize,
    verify_factors,
)
from .fitting import (
    FittingResult,
    det_laurent,
    fitting_delta,
    is_zero_of_delta,
    iwasawa_delta,
    rank_at,
    rank_nullspace_padic,
)
from .fox import (
    AlexanderMatrix,
    Representation,
    TensorRep,
    alexander_matrix,
    evaluate_word,
    format_representation,
    fox_derivative_matrix,
    geometric_sum,
    parse_representation,
    tensor_with_alpha,
)
from .laurent import (
    LaurentPoly,
    content_valuation,
    format_laurent,
    gcd_many,
    laurent_divides,
    normalize_associate,
    parse_laurent,
)
from .matrices import (
    frac_identity,
    frac_inverse,
    frac_rank_nullspace,
    frac_rref,
    frac_solve,
)
from .presentation import (
    Presentation,
    Relator,
    ValidationReport,
    Word,
    format_presentation,
    format_word,
    parse_presentation,
    parse_word,
    total_degree,
    validate_presentation,
)
from .scalars import (
    PAdicApprox,
    Rational,
    format_rational,
    parse_rational,
    unit_ball_check,
    valuation,
)
from .zeros import (
    ZeroReport,
    filter_unit_ball,
    hensel_roots,
    rational_roots,
    zero_report,
)

__version__ = "1.0.0"

__all__ = [
    "AlexanderMatrix",
    "CocycleSpace",
    "CohomologyReport",
    "CrossedHom",
    "DivisionByZero",
    "DuplicateGenerator",
    "ExtensionCandidate",
    "ExtensionCount",
    "FittingResult",
    "GoldenMismatch",
    "HypothesisViolated",
    "IdenticallyZero",
    "InternalInconsistency",
    "LaurentPoly",
    "NotACocycle",
    "NotAUnit",
    "NotInvertible",
    "PAdicApprox",
    "ParseError",
    "Presentation",
    "PropfoxError",
    "Rational",
    "Relator",
    "RelatorCheck",
    "Representation",
    "SpecializedRep",
    "SymSquareReport",
    "TensorRep",
    "TheoremAudit",
    "TheoremViolation",
    "UnknownGenerator",
    "UsageError",
    "ValidationReport",
    "VerificationReport",
    "Word",
    "ZeroExponent",
    "ZeroReport",
    "alexander_matrix",
    "build_extension",
    "coboundary_matrix",
    "cocycle_space",
    "content_valuation",
    "det_laurent",
    "evaluate_cocycle",
    "evaluate_word",
    "extension_count_criterion",
    "filter_unit_ball",
    "fitting_delta",
    "fixed_space",
    "format_laurent",
    "format_presentation",
    "format_rational",
    "format_representation",
    "format_word",
    "fox_derivative_matrix",
    "frac_identity",
    "frac_inverse",
    "frac_rank_nullspace",
    "frac_rref",
    "frac_solve",
    "gcd_many",
    "geometric_sum",
    "h1_report",
    "hensel_roots",
    "is_coboundary",
    "is_zero_of_delta",
    "iwasawa_delta",
    "laurent_divides",
    "normalize_associate",
    "parse_laurent",
    "parse_presentation",
    "parse_rational",
    "parse_representation",
    "parse_word",
    "rank_at",
    "rank_nullspace_padic",
    "rational_roots",
    "specialize",
    "symmetric_square_cocycle",
    "tensor_with_alpha",
    "theorem_audit",
    "total_degree",
    "unit_ball_check",
    "validate_presentation",
    "valuation",
    "verify_factors",
    "zero_report",
]
