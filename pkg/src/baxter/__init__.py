"""Exhaustive Yang-Baxter and Lie-bialgebra verification over small finite fields.

The package enumerates every 2-tensor over GF(p^m) for low-dimensional Lie
and associative algebras, checks classical/quantum Yang-Baxter solutions,
strong-symmetry structure, and coboundary/triangular Lie-bialgebra
conditions, and compares brute-force predicates against closed-form
classifiers, recording any disagreement in a reproducible ledger.
"""
from .algebra import (
    AssocAlgebra,
    FamilyParams,
    LieAlgebra,
    assoc_validate,
    commutator_lie,
    lie_validate,
    load_algebra,
    make_dim2,
    make_family_ab,
    make_family_bd,
    make_matrix_algebra,
    parse_algebra,
)
from .bialgebra import (
    adjoint_act2,
    adjoint_act3,
    cobracket,
    cojacobi_defect,
    is_coboundary,
    is_triangular,
)
from .claims import CLAIM_IDS, ClaimResult, claim_check, claim_default_fields
from .errors import (
    BaxterError,
    CaseNotCovered,
    DimensionMismatch,
    FieldMismatch,
    InputError,
    SingularMatrix,
    SweepTooLarge,
    UnknownClaim,
    ValidationError,
    WrongCharacteristic,
)
from .gf import Field, FieldElement, field, parse_element, parse_field
from .search import (
    COUNTEREXAMPLE_CAP,
    SELECTOR_NAMES,
    DiscrepancyLedger,
    LedgerEntry,
    SolutionReport,
    SweepSpec,
    build_selector_system,
    compile_selector,
    enumerate_tensors,
    resolve_workers,
    selector_predicate,
    strong_symmetric_enumerate,
    sweep,
    tensor_count,
)
from .tensor import (
    BasisChange,
    Tensor2,
    Tensor3,
    im_one_minus_tau_member,
    named_pack,
    named_view,
    parse_tensor2,
)
from .ybe import (
    QybeSides,
    Rank1Decomposition,
    ab_printed_system,
    ab_symmetric_equations,
    bd_case_equations,
    bd_case_of,
    bd_printed_system,
    bracket_12_13,
    bracket_12_23,
    bracket_13_23,
    cybe_residual,
    is_alpha_beta_symmetric,
    is_bd_case_solution,
    is_cybe_solution,
    is_qybe_solution,
    is_strongly_symmetric,
    qybe_sides,
    rank1_tensor,
    strong_rank1_decompose,
    strong_symmetry_equations,
)

__version__ = "0.1.0"

__all__ = [
    "AssocAlgebra",
    "BasisChange",
    "BaxterError",
    "CLAIM_IDS",
    "COUNTEREXAMPLE_CAP",
    "CaseNotCovered",
    "ClaimResult",
    "DimensionMismatch",
    "DiscrepancyLedger",
    "FamilyParams",
    "Field",
    "FieldElement",
    "FieldMismatch",
    "InputError",
    "LedgerEntry",
    "LieAlgebra",
    "QybeSides",
    "Rank1Decomposition",
    "SELECTOR_NAMES",
    "SingularMatrix",
    "SolutionReport",
    "SweepSpec",
    "SweepTooLarge",
    "Tensor2",
    "Tensor3",
    "UnknownClaim",
    "ValidationError",
    "WrongCharacteristic",
    "ab_printed_system",
    "ab_symmetric_equations",
    "adjoint_act2",
    "adjoint_act3",
    "assoc_validate",
    "bd_case_equations",
    "bd_case_of",
    "bd_printed_system",
    "bracket_12_13",
    "bracket_12_23",
    "bracket_13_23",
    "build_selector_system",
    "claim_check",
    "claim_default_fields",
    "cobracket",
    "cojacobi_defect",
    "commutator_lie",
    "compile_selector",
    "cybe_residual",
    "enumerate_tensors",
    "field",
    "im_one_minus_tau_member",
    "is_alpha_beta_symmetric",
    "is_bd_case_solution",
    "is_coboundary",
    "is_cybe_solution",
    "is_qybe_solution",
    "is_strongly_symmetric",
    "is_triangular",
    "lie_validate",
    "load_algebra",
    "make_dim2",
    "make_family_ab",
    "make_family_bd",
    "make_matrix_algebra",
    "named_pack",
    "named_view",
    "parse_algebra",
    "parse_element",
    "parse_field",
    "parse_tensor2",
    "qybe_sides",
    "rank1_tensor",
    "resolve_workers",
    "selector_predicate",
    "strong_rank1_decompose",
    "strong_symmetric_enumerate",
    "strong_symmetry_equations",
    "sweep",
    "tensor_count",
]
