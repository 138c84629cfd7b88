"""Tate-twist decompositions of flag varieties.

Thin wrapper over the C++ core: parse a root datum, generate its Weyl
group, decompose the motive of G/B into Tate twists, and realize the
result in equivariant K-theory and Chow groups.
"""

from flagmotive._core import (
    BaseMismatch,
    BudgetExceeded,
    FlagmotiveError,
    IdentityReport,
    InvalidMatrix,
    ModulePresentation,
    NegativeDegree,
    NotFiniteType,
    NotProper,
    RankMismatch,
    RootDatum,
    ShiftPresent,
    SpecSyntaxError,
    SplittingNotCertified,
    TateMotive,
    WeylGroup,
    assemble_motive,
    augmentation,
    check_strictness,
    chow_poincare,
    complete,
    completed_k0_identity,
    equivariant_k_groups,
    flag_motive,
    kh_decomposition,
    kunneth_factorization,
    oracle_weyl_group,
    parse_root_datum,
    rational_ki_presentation,
    schubert_basis,
    vanishing_guard,
    weyl_group,
)

__all__ = [
    "BaseMismatch",
    "BudgetExceeded",
    "FlagmotiveError",
    "IdentityReport",
    "InvalidMatrix",
    "ModulePresentation",
    "NegativeDegree",
    "NotFiniteType",
    "NotProper",
    "RankMismatch",
    "RootDatum",
    "ShiftPresent",
    "SpecSyntaxError",
    "SplittingNotCertified",
    "TateMotive",
    "WeylGroup",
    "assemble_motive",
    "augmentation",
    "check_strictness",
    "chow_poincare",
    "complete",
    "completed_k0_identity",
    "equivariant_k_groups",
    "flag_motive",
    "kh_decomposition",
    "kunneth_factorization",
    "oracle_weyl_group",
    "parse_root_datum",
    "rational_ki_presentation",
    "schubert_basis",
    "vanishing_guard",
    "weyl_group",
]

__version__ = "0.1.0"
