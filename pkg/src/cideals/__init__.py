"""Exact-arithmetic c-ideal analysis for finite dimensional Lie algebras.

A subalgebra B of L is a c-ideal when some ideal C satisfies
L = B + C with B ∩ C inside the core of B (the largest ideal of L
contained in B).  The package decides that property with verified
certificates, classifies the algebras in which every line has it,
and replays the published structure theorems on concrete algebras
over Q and GF(p).
"""

from .errors import (
    AmbientMismatch,
    BadParams,
    BudgetExceeded,
    DimensionMismatch,
    DivisionByZero,
    DocumentSyntaxError,
    Error,
    FieldMismatch,
    FieldNotFinite,
    IndexOutOfRange,
    JacobiViolation,
    NotAnIdeal,
    NotSquare,
    NotSubalgebra,
    PreconditionUnmet,
    UnknownName,
    ZeroPolynomial,
    ZeroVector,
)
from .fields import Field, GF, Q, Scalar, poly_eval, poly_roots_in_field
from .linalg import (
    Matrix,
    Subspace,
    char_poly,
    eigenspace,
    nullspace,
    parse_subspace,
    parse_vector,
    rref,
    subspace_text,
    vector_text,
)
from .liealg import (
    LieAlgebra,
    SeriesResult,
    direct_sum,
    is_nilpotent,
    is_solvable,
    quotient_algebra,
    restricted_algebra,
)
from .lattice import (
    DEFAULT_BUDGET,
    cartan_subalgebras,
    core,
    enum_ideals,
    enum_subalgebras,
    enum_subspaces,
    gaussian_binomial,
    maximal_nilpotent_subalgebras,
    maximal_subalgebras,
    normalizer,
    one_dim_ideals,
    projective_points,
    subspace_count,
)
from .cideal import (
    CIdealVerdict,
    FrattiniConsequence,
    NO,
    UNKNOWN,
    YES,
    characteristic_ideals,
    frattini_consequence_check,
    is_cideal,
    is_cideal_by_scan,
    line_cideal,
    verify_certificate,
)
from .structure import (
    CASE_CUBE_ZERO,
    CASE_NEITHER,
    CASE_SPLIT,
    LineClassification,
    StructureProfile,
    abelian_socle,
    almost_abelian_witness,
    classify_line_cideals,
    derived_length,
    frattini,
    frattini_of_subalgebra,
    is_abelian,
    is_almost_abelian,
    is_supersolvable,
    nilpotency_class,
    radicals,
    structure_profile,
    supersolvable_flag,
    upper_central_series,
)
from .catalog import (
    builtin,
    builtin_names,
    catalog_algebras,
    parse,
    random_solvable,
    serialize,
)
from .harness import (
    FuzzResult,
    SUITE_IDS,
    TheoremReport,
    fuzz,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BadParams",
    "BudgetExceeded",
    "CASE_CUBE_ZERO",
    "CASE_NEITHER",
    "CASE_SPLIT",
    "CIdealVerdict",
    "DEFAULT_BUDGET",
    "DimensionMismatch",
    "DivisionByZero",
    "DocumentSyntaxError",
    "Error",
    "Field",
    "FieldMismatch",
    "FieldNotFinite",
    "FrattiniConsequence",
    "FuzzResult",
    "GF",
    "IndexOutOfRange",
    "JacobiViolation",
    "LieAlgebra",
    "LineClassification",
    "Matrix",
    "NO",
    "NotAnIdeal",
    "NotSquare",
    "NotSubalgebra",
    "PreconditionUnmet",
    "Q",
    "SUITE_IDS",
    "Scalar",
    "SeriesResult",
    "StructureProfile",
    "Subspace",
    "TheoremReport",
    "UNKNOWN",
    "UnknownName",
    "YES",
    "ZeroPolynomial",
    "ZeroVector",
    "abelian_socle",
    "almost_abelian_witness",
    "builtin",
    "builtin_names",
    "cartan_subalgebras",
    "catalog_algebras",
    "char_poly",
    "characteristic_ideals",
    "classify_line_cideals",
    "core",
    "derived_length",
    "direct_sum",
    "eigenspace",
    "enum_ideals",
    "enum_subalgebras",
    "enum_subspaces",
    "frattini",
    "frattini_consequence_check",
    "frattini_of_subalgebra",
    "fuzz",
    "gaussian_binomial",
    "is_abelian",
    "is_almost_abelian",
    "is_cideal",
    "is_cideal_by_scan",
    "is_nilpotent",
    "is_solvable",
    "is_supersolvable",
    "line_cideal",
    "maximal_nilpotent_subalgebras",
    "maximal_subalgebras",
    "nilpotency_class",
    "normalizer",
    "nullspace",
    "one_dim_ideals",
    "parse",
    "parse_subspace",
    "parse_vector",
    "poly_eval",
    "poly_roots_in_field",
    "projective_points",
    "quotient_algebra",
    "radicals",
    "random_solvable",
    "restricted_algebra",
    "rref",
    "run_suite",
    "serialize",
    "structure_profile",
    "subspace_count",
    "subspace_text",
    "supersolvable_flag",
    "upper_central_series",
    "verify_certificate",
    "vector_text",
]
