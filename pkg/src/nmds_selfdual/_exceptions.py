"""Exception hierarchy for the nmds-selfdual toolkit."""

from __future__ import annotations


class NmdsError(Exception):
    """Base exception for all nmds-selfdual errors."""


# ---------------------------------------------------------------------------
# Finite field errors
# ---------------------------------------------------------------------------


class FieldError(NmdsError):
    """Base class for errors raised by finite field arithmetic."""


class InvalidFieldSpec(FieldError):
    """The field description is not usable.

    Raised when ``p`` is not prime, ``m < 1``, or the modulus is not monic
    and irreducible of degree ``m`` over F_p.
    """


class DivisionByZero(FieldError, ZeroDivisionError):
    """Inverse of the zero element was requested."""


class UndefinedCharacterArgument(FieldError):
    """The quadratic character is only defined on nonzero elements."""


class UnsupportedField(FieldError):
    """The operation needs odd characteristic (or a smaller field)."""


class NonResidue(FieldError):
    """A square root of a non-square was requested."""


class InvalidSubfield(FieldError):
    """The requested subfield does not sit inside the field as required."""


# ---------------------------------------------------------------------------
# Linear algebra errors
# ---------------------------------------------------------------------------


class DimensionMismatch(NmdsError, ValueError):
    """Matrix shapes are incompatible with the requested operation."""


# ---------------------------------------------------------------------------
# Code construction / verification errors
# ---------------------------------------------------------------------------


class CodeError(NmdsError):
    """Base class for errors raised while building or checking codes."""


class NotEnoughPoints(CodeError):
    """The evaluation set must have more points than the dimension."""


class ZeroMultiplier(CodeError, ValueError):
    """Every column multiplier must be nonzero."""


class DuplicatePoint(CodeError):
    """Evaluation points must be pairwise distinct."""


class InvalidWitness(CodeError):
    """A zero-sum witness does not have half size or does not sum to zero."""


class BudgetExceeded(NmdsError):
    """An exhaustive computation would exceed its configured budget.

    Attributes:
        required: Work units the computation needs.
        budget: The configured limit.
    """

    def __init__(self, message: str, *, required: int, budget: int) -> None:
        self.message = message
        self.required = required
        self.budget = budget
        super().__init__(message)

    def __str__(self) -> str:
        return f"{self.message} (needs {self.required}, budget {self.budget})"


class CombinatorialBudgetExceeded(BudgetExceeded):
    """Too many column subsets for the rank classifier."""


class SearchBudgetExceeded(BudgetExceeded):
    """Too many subsets for the zero-sum subset search."""


# ---------------------------------------------------------------------------
# Multiplier solver errors
# ---------------------------------------------------------------------------


class MultiplierError(NmdsError):
    """Base class for errors raised by the self-duality multiplier solver."""


class SumNotZero(MultiplierError):
    """The evaluation set does not sum to zero."""


class NonUniformCharacter(MultiplierError):
    """The quadratic character of ``pi_A`` is not constant over the set."""


class VerificationFailed(MultiplierError):
    """A computed object failed its independent re-verification.

    Given correct arithmetic this is unreachable; it signals a bug.
    """


# ---------------------------------------------------------------------------
# Construction family errors
# ---------------------------------------------------------------------------


class ConstructionError(NmdsError):
    """Base class for errors raised by the evaluation-set builders."""


class InvalidParams(ConstructionError):
    """Family parameters violate the family's arithmetic conditions."""


class ParityViolation(InvalidParams):
    """The parity condition linking ``r`` and ``s`` does not hold."""


class CosetCollision(InvalidParams):
    """Two requested coset indices give the same coset."""


class WitnessCheckFailed(ConstructionError):
    """A builder could not produce a verified half-size zero-sum subset."""


class RepresentativePairingImpossible(ConstructionError):
    """Not enough coset representatives to form the required +/- pairs."""


class DocumentError(NmdsError):
    """A code exchange document is malformed."""


# ---------------------------------------------------------------------------
# Exception to CLI exit-code mapping
# ---------------------------------------------------------------------------

EXIT_INVALID = 2
EXIT_VERIFICATION = 3

_EXIT_MAP: dict[type[NmdsError], int] = {
    InvalidParams: EXIT_INVALID,
    FieldError: EXIT_INVALID,
    DocumentError: EXIT_INVALID,
    DuplicatePoint: EXIT_INVALID,
    NotEnoughPoints: EXIT_INVALID,
    ZeroMultiplier: EXIT_INVALID,
    RepresentativePairingImpossible: EXIT_INVALID,
    BudgetExceeded: EXIT_INVALID,
}


def exit_code_for(exc: NmdsError) -> int:
    """Select the CLI exit status for an error.

    Walks the exception's MRO so subclasses inherit their parent's code.
    Anything not listed is a failed verification (exit 3).
    """
    for cls in type(exc).__mro__:
        code = _EXIT_MAP.get(cls)
        if code is not None:
            return code
    return EXIT_VERIFICATION
