"""Tests for the exception hierarchy and exit-code mapping."""

import pytest

from nmds_selfdual._exceptions import (
    EXIT_INVALID,
    EXIT_VERIFICATION,
    BudgetExceeded,
    CombinatorialBudgetExceeded,
    CosetCollision,
    DivisionByZero,
    DocumentError,
    DuplicatePoint,
    FieldError,
    InvalidFieldSpec,
    InvalidParams,
    NmdsError,
    NonUniformCharacter,
    ParityViolation,
    SearchBudgetExceeded,
    SumNotZero,
    VerificationFailed,
    WitnessCheckFailed,
    ZeroMultiplier,
    exit_code_for,
)

# ---------------------------------------------------------------------------
# Hierarchy
# ---------------------------------------------------------------------------


class TestHierarchy:
    """Tests for the exception class tree."""

    def test_everything_is_nmds_error(self) -> None:
        """Every library error derives from NmdsError."""
        for cls in (InvalidFieldSpec, DuplicatePoint, SumNotZero, CosetCollision, DocumentError):
            assert issubclass(cls, NmdsError)

    def test_division_by_zero_is_builtin_too(self) -> None:
        """DivisionByZero can be caught as ZeroDivisionError."""
        assert issubclass(DivisionByZero, ZeroDivisionError)
        assert issubclass(DivisionByZero, FieldError)

    def test_zero_multiplier_is_value_error(self) -> None:
        """ZeroMultiplier can be raised inside model validators."""
        assert issubclass(ZeroMultiplier, ValueError)
        assert issubclass(ZeroMultiplier, NmdsError)

    def test_parameter_subclasses(self) -> None:
        """Parity and collision errors are parameter errors."""
        assert issubclass(ParityViolation, InvalidParams)
        assert issubclass(CosetCollision, InvalidParams)

    def test_budget_message(self) -> None:
        """Budget errors carry the required work and the limit."""
        exc = CombinatorialBudgetExceeded("rank scan", required=500, budget=100)
        assert exc.required == 500
        assert exc.budget == 100
        assert str(exc) == "rank scan (needs 500, budget 100)"
        assert isinstance(exc, BudgetExceeded)


# ---------------------------------------------------------------------------
# Exit codes
# ---------------------------------------------------------------------------


class TestExitCodes:
    """Tests for exit_code_for."""

    @pytest.mark.parametrize(
        "exc",
        [
            InvalidParams("bad t"),
            ParityViolation("s odd"),
            InvalidFieldSpec("q=12"),
            DocumentError("not json"),
            SearchBudgetExceeded("search", required=2, budget=1),
        ],
    )
    def test_invalid_input(self, exc: NmdsError) -> None:
        """Bad input exits with 2."""
        assert exit_code_for(exc) == EXIT_INVALID == 2

    @pytest.mark.parametrize(
        "exc",
        [
            VerificationFailed("G G^T != 0"),
            WitnessCheckFailed("sum"),
            NonUniformCharacter("eta"),
            SumNotZero("sum"),
        ],
    )
    def test_verification_failure(self, exc: NmdsError) -> None:
        """Failed checks exit with 3."""
        assert exit_code_for(exc) == EXIT_VERIFICATION == 3

    def test_base_error_defaults_to_verification(self) -> None:
        """Unmapped errors are treated as verification failures."""
        assert exit_code_for(NmdsError("?")) == EXIT_VERIFICATION
