"""Tests for the self-duality multiplier solver and the build pipeline."""

import random

import pytest

from nmds_selfdual._codes import EvalSet, build_code, has_zero_sum_k_subset, is_self_dual, pi_of
from nmds_selfdual._config import Budgets
from nmds_selfdual._exceptions import (
    MultiplierError,
    NonUniformCharacter,
    SumNotZero,
    VerificationFailed,
)
from nmds_selfdual._field import GaloisField
from nmds_selfdual._linalg import nullspace_basis, rank
from nmds_selfdual._multipliers import (
    eta_profile,
    pipeline,
    self_duality_exponents,
    solve_lambda,
    verification_matrix,
)


def _set(q: int, points: list[int], witness: list[int] | None = None) -> EvalSet:
    return EvalSet.create(GaloisField.from_order(q), points, witness=witness)


def _random_zero_sum_sets(q: int, size: int, count: int, seed: int) -> list[EvalSet]:
    """Random zero-sum sets of the given size with uniform eta(pi_A)."""
    field = GaloisField.from_order(q)
    rng = random.Random(seed)
    found: list[EvalSet] = []
    while len(found) < count:
        head = rng.sample(range(q), size - 1)
        last = field.neg(field.sum(head))
        if last in head:
            continue
        eval_set = EvalSet.create(field, [*head, last])
        if eta_profile(eval_set).uniform:
            found.append(eval_set)
    return found


# ---------------------------------------------------------------------------
# The linear system
# ---------------------------------------------------------------------------


class TestVerificationMatrix:
    """Tests for the self-duality system."""

    def test_exponents_skip_2k_minus_1(self) -> None:
        """Exponent 2k - 1 is the one left out."""
        assert self_duality_exponents(1) == [2, 0]
        assert self_duality_exponents(3) == [6, 4, 3, 2, 1, 0]

    def test_odd_size_rejected(self) -> None:
        """Only even-length sets have a square system."""
        with pytest.raises(MultiplierError):
            verification_matrix(_set(13, [1, 2, 3]))

    def test_nullspace_spanned_by_inverse_pi(self) -> None:
        """For a zero-sum set the kernel is the line through 1/pi_A."""
        eval_set = _set(13, [0, 1, 3, 9])
        field = eval_set.field
        matrix = verification_matrix(eval_set)
        assert rank(matrix) == 3
        (basis,) = nullspace_basis(matrix)
        expected = [field.inv(pi_of(eval_set, i)) for i in range(4)]
        scale = field.div(expected[0], basis[0])
        assert [field.mul(scale, v) for v in basis] == expected


# ---------------------------------------------------------------------------
# Solver
# ---------------------------------------------------------------------------


class TestSolveLambda:
    """Tests for solve_lambda."""

    def test_pair_with_k_one(self) -> None:
        """{1, -1} over F_13 gives a self-dual [2, 1] code."""
        eval_set = _set(13, [1, 12])
        multipliers = solve_lambda(eval_set)
        code = build_code(eval_set, 1, multipliers)
        assert is_self_dual(code)

    def test_mds_example(self) -> None:
        """{0, 1, 3, 9} over F_13 is zero-sum with eta(pi_A) = +1 everywhere."""
        eval_set = _set(13, [0, 1, 3, 9])
        assert eta_profile(eval_set).values == (1, 1, 1, 1)
        multipliers = solve_lambda(eval_set)
        assert all(v != 0 for v in multipliers.values)
        assert is_self_dual(build_code(eval_set, 2, multipliers))

    def test_non_square_scaling(self) -> None:
        """A set with eta(pi_A) = -1 is scaled by g before taking roots."""
        eval_set = _set(13, [4, 3, 12, 9, 10, 1])
        assert set(eta_profile(eval_set).values) == {-1}
        assert is_self_dual(build_code(eval_set, 3, solve_lambda(eval_set)))

    def test_sum_not_zero(self) -> None:
        """1 + 2 + 3 + 4 = 10 in F_13."""
        with pytest.raises(SumNotZero):
            solve_lambda(_set(13, [1, 2, 3, 4]))

    def test_non_uniform_character(self) -> None:
        """{0, 1, 2, 10} sums to zero but pi_A mixes squares and non-squares."""
        with pytest.raises(NonUniformCharacter):
            solve_lambda(_set(13, [0, 1, 2, 10]))

    def test_odd_length(self) -> None:
        """Odd lengths cannot be self-dual."""
        with pytest.raises(MultiplierError):
            solve_lambda(_set(13, [1, 5, 7]))

    def test_random_sets_over_extension_fields(self) -> None:
        """Uniform zero-sum sets always yield self-dual codes."""
        for q, size in ((25, 6), (27, 4), (49, 8)):
            for eval_set in _random_zero_sum_sets(q, size, 5, seed=q):
                code = build_code(eval_set, size // 2, solve_lambda(eval_set))
                assert is_self_dual(code)


# ---------------------------------------------------------------------------
# Pipeline
# ---------------------------------------------------------------------------


class TestPipeline:
    """Tests for the build-and-classify pipeline."""

    def test_mds_without_zero_sum_pair(self) -> None:
        """No pair of {0, 1, 3, 9} cancels, so the code is MDS."""
        code, classification = pipeline(_set(13, [0, 1, 3, 9]))
        assert classification.verdict == "MDS"
        assert classification.d == 3
        assert is_self_dual(code)

    def test_nmds_with_witness(self) -> None:
        """The subgroup of order 6 in F_13 with its even powers as witness."""
        code, classification = pipeline(_set(13, [4, 3, 12, 9, 10, 1], witness=[1, 3, 5]))
        assert classification.verdict == "NMDS"
        assert classification.d == 3
        assert (1, 3, 5) in classification.dependent_subsets

    def test_witness_demands_nmds(self) -> None:
        """A carried witness on an MDS set is a verification failure."""
        eval_set = _set(13, [0, 1, 3, 9])
        forged = eval_set.model_copy(update={"witness": (0, 1)})._bind(eval_set.field)
        with pytest.raises(VerificationFailed):
            pipeline(forged)

    def test_search_budget_skips_cross_check(self, caplog: pytest.LogCaptureFixture) -> None:
        """An exhausted search budget is logged, not fatal."""
        budgets = Budgets(search_budget=1)
        with caplog.at_level("WARNING", logger="nmds_selfdual"):
            _, classification = pipeline(_set(13, [4, 3, 12, 9, 10, 1]), budgets)
        assert classification.verdict == "NMDS"
        assert "zero-sum cross-check" in caplog.text

    def test_verdict_tracks_zero_sums(self) -> None:
        """MDS exactly when no k-subset sums to zero, over random sets."""
        for eval_set in _random_zero_sum_sets(29, 6, 10, seed=5):
            _, classification = pipeline(eval_set)
            zero_sum = has_zero_sum_k_subset(eval_set, eval_set.n // 2)
            assert classification.verdict == ("MDS" if zero_sum is None else "NMDS")
