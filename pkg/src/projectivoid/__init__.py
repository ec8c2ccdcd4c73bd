"""Finite series with p-power-denominator exponents, their matrix groups,
and classical Laurent matrix splitting."""

from .classical import (
    FactorizationCertificate,
    LaurentPoly,
    LMatrix,
    SplittingType,
    split,
    splitting_invariance_check,
)
from .coefficients import INFINITY, PadicCoeff, Valuation
from .errors import (
    DimensionMismatch,
    DivisionByZero,
    DomainError,
    InvalidAutomorphism,
    IterationLimitExceeded,
    NegativeValuation,
    NonpositivePrecision,
    NormExceedsOne,
    NotATransitionMatrix,
    NotAUnit,
    NotInvertibleOverRing,
    ParseError,
    PrimeMismatch,
    RaggedMatrix,
    SubringViolation,
    WrongPrimeDenominator,
    ZeroSeries,
)
from .exponents import (
    ONE,
    PExp,
    ZERO,
    canon,
    enumerate_antidiagonal,
    enumerate_calkin_wilf,
    exp_add,
    exp_cmp,
    exp_neg,
    exp_sub,
    is_prime,
)
from .fields import PrimeField, RationalField
from .literals import (
    doc_to_laurent_matrix,
    doc_to_matrix,
    format_exponent,
    format_laurent,
    format_residue,
    format_series,
    laurent_matrix_to_doc,
    matrix_to_doc,
    parse_laurent,
    parse_series,
)
from .matrices import (
    BundleDegree,
    SMatrix,
    act,
    degree_one_family,
    random_automorphism,
)
from .series import PSeries, ResiduePoly, SubringTag, UnitDecomposition

__version__ = "0.1.0"

__all__ = [
    "BundleDegree",
    "DimensionMismatch",
    "DivisionByZero",
    "DomainError",
    "FactorizationCertificate",
    "INFINITY",
    "InvalidAutomorphism",
    "IterationLimitExceeded",
    "LMatrix",
    "LaurentPoly",
    "NegativeValuation",
    "NonpositivePrecision",
    "NormExceedsOne",
    "NotATransitionMatrix",
    "NotAUnit",
    "NotInvertibleOverRing",
    "ONE",
    "PExp",
    "PSeries",
    "PadicCoeff",
    "ParseError",
    "PrimeField",
    "PrimeMismatch",
    "RaggedMatrix",
    "RationalField",
    "ResiduePoly",
    "SMatrix",
    "SplittingType",
    "SubringTag",
    "SubringViolation",
    "UnitDecomposition",
    "Valuation",
    "WrongPrimeDenominator",
    "ZERO",
    "ZeroSeries",
    "act",
    "canon",
    "degree_one_family",
    "doc_to_laurent_matrix",
    "doc_to_matrix",
    "enumerate_antidiagonal",
    "enumerate_calkin_wilf",
    "exp_add",
    "exp_cmp",
    "exp_neg",
    "exp_sub",
    "format_exponent",
    "format_laurent",
    "format_residue",
    "format_series",
    "is_prime",
    "laurent_matrix_to_doc",
    "matrix_to_doc",
    "parse_laurent",
    "parse_series",
    "random_automorphism",
    "split",
    "splitting_invariance_check",
]
