"""Self-dual near-MDS codes over finite fields of odd characteristic."""

from nmds_selfdual._version import __version__
from nmds_selfdual._config import Budgets
from nmds_selfdual._field import GaloisField, find_irreducible, is_irreducible, prime_power
from nmds_selfdual._linalg import Matrix, det, mat_mul, mat_vec, nullspace_basis, rank, rref, transpose
from nmds_selfdual._codes import (
    EvalSet,
    LinearCode,
    MultiplierVector,
    SelfDualityCheck,
    build_code,
    build_grs_code,
    classify_by_distance,
    classify_by_ranks,
    det_shifted_vandermonde,
    dual_code,
    has_zero_sum_k_subset,
    is_self_dual,
    min_distance_bruteforce,
    pi_of,
    shifted_vandermonde_sign,
)
from nmds_selfdual._multipliers import EtaProfile, eta_profile, pipeline, solve_lambda, verification_matrix
from nmds_selfdual._exchange import VerificationReport, load_document, make_document, verify_document
from nmds_selfdual.constructions import (
    build_cosets,
    build_cyclic,
    build_from_recipe,
    build_mixed_cosets,
    build_subspace_cosets,
    build_trace_fibers,
    field_for_recipe,
    scan_lengths,
)

from nmds_selfdual.types import (
    Classification,
    CodeDocument,
    FamilyLengths,
    FieldSpec,
    LengthScan,
    Recipe,
    VerificationTranscript,
)

from nmds_selfdual._exceptions import (
    BudgetExceeded,
    CodeError,
    CombinatorialBudgetExceeded,
    ConstructionError,
    CosetCollision,
    DimensionMismatch,
    DivisionByZero,
    DocumentError,
    DuplicatePoint,
    FieldError,
    InvalidFieldSpec,
    InvalidParams,
    InvalidSubfield,
    InvalidWitness,
    MultiplierError,
    NmdsError,
    NonResidue,
    NonUniformCharacter,
    NotEnoughPoints,
    ParityViolation,
    RepresentativePairingImpossible,
    SearchBudgetExceeded,
    SumNotZero,
    UndefinedCharacterArgument,
    UnsupportedField,
    VerificationFailed,
    WitnessCheckFailed,
    ZeroMultiplier,
)

__all__ = [
    "__version__",
    "Budgets",
    "GaloisField",
    "find_irreducible",
    "is_irreducible",
    "prime_power",
    "Matrix",
    "det",
    "mat_mul",
    "mat_vec",
    "nullspace_basis",
    "rank",
    "rref",
    "transpose",
    "EvalSet",
    "LinearCode",
    "MultiplierVector",
    "SelfDualityCheck",
    "build_code",
    "build_grs_code",
    "classify_by_distance",
    "classify_by_ranks",
    "det_shifted_vandermonde",
    "dual_code",
    "has_zero_sum_k_subset",
    "is_self_dual",
    "min_distance_bruteforce",
    "pi_of",
    "shifted_vandermonde_sign",
    "EtaProfile",
    "eta_profile",
    "pipeline",
    "solve_lambda",
    "verification_matrix",
    "VerificationReport",
    "load_document",
    "make_document",
    "verify_document",
    "build_cosets",
    "build_cyclic",
    "build_from_recipe",
    "build_mixed_cosets",
    "build_subspace_cosets",
    "build_trace_fibers",
    "field_for_recipe",
    "scan_lengths",
    "Classification",
    "CodeDocument",
    "FamilyLengths",
    "FieldSpec",
    "LengthScan",
    "Recipe",
    "VerificationTranscript",
    "BudgetExceeded",
    "CodeError",
    "CombinatorialBudgetExceeded",
    "ConstructionError",
    "CosetCollision",
    "DimensionMismatch",
    "DivisionByZero",
    "DocumentError",
    "DuplicatePoint",
    "FieldError",
    "InvalidFieldSpec",
    "InvalidParams",
    "InvalidSubfield",
    "InvalidWitness",
    "MultiplierError",
    "NmdsError",
    "NonResidue",
    "NonUniformCharacter",
    "NotEnoughPoints",
    "ParityViolation",
    "RepresentativePairingImpossible",
    "SearchBudgetExceeded",
    "SumNotZero",
    "UndefinedCharacterArgument",
    "UnsupportedField",
    "VerificationFailed",
    "WitnessCheckFailed",
    "ZeroMultiplier",
]
