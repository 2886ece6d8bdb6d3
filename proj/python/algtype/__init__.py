"""Python bindings for the algtype universal-algebra toolkit."""

from ._core import (
    AlgtypeError,
    CapExceeded,
    DEFAULT_TERM_CAP,
    FiniteAlgebra,
    LoadError,
    NoGeneralRepresentative,
    OperationTable,
    Signature,
    SignatureMismatch,
    Term,
    all_endos_mono,
    are_equivalent,
    arity_multiset,
    enumerate_homomorphisms,
    enumerate_terms,
    essential_rank,
    evaluate,
    every_epi_has_section,
    generate_clone_fragment,
    hom_set_bijection,
    is_homomorphism,
    is_support,
    match,
    minimal_support,
    naturality_check,
    parse_term,
    recover_type,
    run_cli,
    substitute,
    term_operation_table,
    variable,
    variety_rank_estimate,
    verify_roundtrip,
)

__all__ = [name for name in dir() if not name.startswith("_")]
