"""Computational algebra for finite rings with involutions.

Build finite *-rings from tables or from family constructors, compute
their structural invariants, decide clean-decomposition properties with
explicit witnesses, and verify a battery of characterization statements
over a bundled corpus.
"""
from .cleanness import (
    CleanWitness,
    DecisionReport,
    Variant,
    decide,
    holds,
    projectionize,
    witnesses,
)
from .constructors import (
    FiniteGroup,
    construct,
    construct_group,
    generated_ideal,
    is_2_group,
    make_cyclic_group,
    make_gaussian,
    make_group_product,
    make_group_ring,
    make_matrix,
    make_modular,
    make_poly_quotient,
    make_product,
    make_quotient,
    make_trivial_extension,
    make_truncated_series,
)
from .core import (
    Automorphism,
    FiniteRing,
    Involution,
    StarRing,
    build_automorphism,
    build_involution,
    build_ring,
    enumerate_involutions,
    inverse,
    max_order,
    quotient_ring,
)
from .errors import (
    AxiomViolation,
    NotIdeal,
    NotIdempotent,
    NotInvolution,
    NotStarIdeal,
    OrderBoundExceeded,
    RadicalPreconditionFailed,
    ShapeError,
    SpecError,
    StarCleanError,
)
from .harness import (
    STATEMENT_IDS,
    Aux,
    CorpusReport,
    VerificationResult,
    run_corpus,
    unit_order,
    verify_statement,
)
from .structure import (
    Ideal,
    StructureFlags,
    as_star_ideal,
    center,
    center_elements,
    check_ideal,
    classify_flags,
    idempotents,
    ideals,
    jacobson_radical,
    lifts_idempotents,
    maximal_ideals,
    one_minus_unit_set,
    prime_radical,
    projections,
    semisimple_quotient,
    units,
)

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "Aux",
    "AxiomViolation",
    "CleanWitness",
    "CorpusReport",
    "DecisionReport",
    "FiniteGroup",
    "FiniteRing",
    "Ideal",
    "Involution",
    "NotIdeal",
    "NotIdempotent",
    "NotInvolution",
    "NotStarIdeal",
    "OrderBoundExceeded",
    "RadicalPreconditionFailed",
    "STATEMENT_IDS",
    "ShapeError",
    "SpecError",
    "StarCleanError",
    "StarRing",
    "StructureFlags",
    "Variant",
    "VerificationResult",
    "as_star_ideal",
    "build_automorphism",
    "build_involution",
    "build_ring",
    "center",
    "center_elements",
    "check_ideal",
    "classify_flags",
    "construct",
    "construct_group",
    "decide",
    "enumerate_involutions",
    "generated_ideal",
    "holds",
    "idempotents",
    "ideals",
    "inverse",
    "is_2_group",
    "jacobson_radical",
    "lifts_idempotents",
    "make_cyclic_group",
    "make_gaussian",
    "make_group_product",
    "make_group_ring",
    "make_matrix",
    "make_modular",
    "make_poly_quotient",
    "make_product",
    "make_quotient",
    "make_trivial_extension",
    "make_truncated_series",
    "max_order",
    "maximal_ideals",
    "one_minus_unit_set",
    "prime_radical",
    "projectionize",
    "projections",
    "quotient_ring",
    "run_corpus",
    "semisimple_quotient",
    "unit_order",
    "units",
    "verify_statement",
    "witnesses",
]
