"""Tests for the built-in invariant suites."""

import pytest

from nmds_selfdual import _selfcheck
from nmds_selfdual._exceptions import SumNotZero


def _fails() -> str:
    raise AssertionError("broken invariant")


def _raises_library_error() -> str:
    raise SumNotZero("points sum to 3")


class TestRunSelfcheck:
    """Tests for run_selfcheck bookkeeping."""

    def test_collects_failures(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Failing checks are reported, not raised."""
        monkeypatch.setattr(
            _selfcheck,
            "CHECKS",
            {"ok": lambda: "fine", "assert": _fails, "library": _raises_library_error},
        )
        results = _selfcheck.run_selfcheck()
        assert [(r.name, r.passed) for r in results] == [("ok", True), ("assert", False), ("library", False)]
        assert results[1].detail == "broken invariant"

    def test_linear_algebra_suite(self) -> None:
        """The linear-algebra suite passes on its own."""
        assert _selfcheck.check_linear_algebra() == "50 random matrices over F_25"

    def test_multiplier_suite(self) -> None:
        """The multiplier suite solves at least one uniform set."""
        assert _selfcheck.check_multiplier_nullspace().endswith("uniform sets solved")

    def test_families_suite(self) -> None:
        """Every family builds an NMDS code at its smallest parameters."""
        assert _selfcheck.check_families() == "cyclic, cosets, mixed-cosets, subspace, trace"
