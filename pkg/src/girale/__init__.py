"""Finite-model workbench for residuated lattices, girales, and their logics."""

__version__ = "0.1.0"

from .algebra import (
    AlgHom,
    ClassReport,
    CongruenceSet,
    FiniteAlgebra,
    NotResiduated,
    check_class,
    check_signature_laws,
    congruence_set,
    direct_product,
    enumerate_homs,
    girale_expand,
    negative_cone,
    residuals_from_mult,
    trivial_algebra,
)
from .amalgam import Amalgam, Span, amalgamate, span_catalog, verify_amalgam
from .capacity import CapacityError
from .construct import (
    KClassQuery,
    MembershipResult,
    build_R,
    lift_embedding,
    member_K,
    restrict_embedding,
)
from .formula import Formula, ParseError, free_variables, parse, render, substitute
from .group import (
    FiniteGroup,
    GroupHom,
    PrimeSet,
    check_sigma,
    is_essential,
    make_group,
    pushout,
)
from .proofs import (
    HilbertSystem,
    SYSTEMS,
    Sequent,
    SequentProof,
    check_derivation,
    extract_craig,
    match_axiom,
    parse_sequent,
    prove_sequent,
)
from .semantics import (
    consequence,
    deduction_check,
    eval_formula,
    interpolant_search,
    valid,
)

__all__ = [
    "AlgHom",
    "Amalgam",
    "CapacityError",
    "ClassReport",
    "CongruenceSet",
    "FiniteAlgebra",
    "FiniteGroup",
    "Formula",
    "GroupHom",
    "HilbertSystem",
    "KClassQuery",
    "MembershipResult",
    "NotResiduated",
    "ParseError",
    "PrimeSet",
    "SYSTEMS",
    "Sequent",
    "SequentProof",
    "Span",
    "amalgamate",
    "build_R",
    "check_class",
    "check_derivation",
    "check_signature_laws",
    "check_sigma",
    "congruence_set",
    "consequence",
    "deduction_check",
    "direct_product",
    "enumerate_homs",
    "eval_formula",
    "extract_craig",
    "free_variables",
    "girale_expand",
    "interpolant_search",
    "is_essential",
    "lift_embedding",
    "make_group",
    "match_axiom",
    "member_K",
    "negative_cone",
    "parse",
    "parse_sequent",
    "prove_sequent",
    "pushout",
    "render",
    "residuals_from_mult",
    "restrict_embedding",
    "span_catalog",
    "substitute",
    "trivial_algebra",
    "valid",
    "verify_amalgam",
]
