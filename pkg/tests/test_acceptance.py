"""End-to-end checks of the construction families at published parameters.

The heavier sweeps are marked ``slow``; run them with ``pytest -m slow``.
"""

import itertools
import random

import pytest

from nmds_selfdual._codes import (
    EvalSet,
    MultiplierVector,
    build_code,
    classify_by_ranks,
    det_shifted_vandermonde,
    exponent_matrix,
    has_zero_sum_k_subset,
    is_self_dual,
    min_distance_bruteforce,
    pi_of,
    row_exponents,
    shifted_vandermonde_sign,
)
from nmds_selfdual._exceptions import InvalidParams
from nmds_selfdual._field import GaloisField
from nmds_selfdual._linalg import det, nullspace_basis, rank
from nmds_selfdual._multipliers import eta_profile, pipeline, solve_lambda, verification_matrix
from nmds_selfdual.constructions import (
    CyclicBuilder,
    build_cosets,
    build_cyclic,
    build_subspace_cosets,
    build_trace_fibers,
)


def _cyclic_lengths(q: int) -> list[int]:
    lengths = []
    for n in range(4, q - 1, 2):
        try:
            CyclicBuilder.validate(q, n)
        except InvalidParams:
            continue
        lengths.append(n)
    return lengths


# ---------------------------------------------------------------------------
# Single instances
# ---------------------------------------------------------------------------


class TestInstances:
    """Small parameter sets with a known [n, k, d]."""

    def test_cosets_over_f25(self) -> None:
        """e = 4, f = 6, t = 1 over F_25 gives a self-dual [6, 3, 3] NMDS code."""
        code, classification = pipeline(build_cosets(GaloisField.from_order(25), 4, 6, 1))
        assert classification.verdict == "NMDS"
        assert min_distance_bruteforce(code) == 3

    def test_trace_over_f9(self) -> None:
        """p = 3, m = 1, t = 2, s = 0 gives a self-dual [6, 3, 3] NMDS code."""
        code, classification = pipeline(build_trace_fibers(GaloisField.from_order(9), 2, 0))
        assert classification.verdict == "NMDS"
        assert min_distance_bruteforce(code) == 3

    @pytest.mark.slow
    def test_subspace_length_twenty(self) -> None:
        """q = 25, r = 5, ell = 1, t = 2 gives a self-dual [20, 10] NMDS code."""
        code, classification = pipeline(build_subspace_cosets(GaloisField.from_order(25), 5, 1, 2))
        assert (code.n, code.k) == (20, 10)
        assert classification.verdict == "NMDS"
        assert classification.d == 10


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------


@pytest.mark.slow
class TestSweeps:
    """Exhaustive and randomised sweeps."""

    @pytest.mark.parametrize("q", [13, 17, 25, 29, 37])
    def test_cyclic_family(self, q: int) -> None:
        """Every admissible n gives a self-dual NMDS code."""
        field = GaloisField.from_order(q)
        for n in _cyclic_lengths(q):
            code, classification = pipeline(build_cyclic(field, n))
            assert is_self_dual(code)
            assert classification.verdict == "NMDS"
            if q ** (n // 2) <= 10**7:
                assert min_distance_bruteforce(code) == n // 2

    def test_determinant_identity(self) -> None:
        """1000 random tuples satisfy the shifted determinant identity."""
        rng = random.Random(1000)
        for _ in range(1000):
            q = rng.choice((13, 25, 81))
            field = GaloisField.from_order(q)
            k = rng.randint(1, 6)
            points = [rng.randrange(q) for _ in range(k)]
            value = det(exponent_matrix(field, points, row_exponents(k)))
            expected = det_shifted_vandermonde(field, points)
            if shifted_vandermonde_sign(k) < 0:
                expected = field.neg(expected)
            assert value == expected
            degenerate = field.sum(points) == 0 or len(set(points)) < k
            assert (value == 0) == degenerate

    def test_zero_sum_oracle_over_f11(self) -> None:
        """Rank verdict is MDS exactly when no k-subset sums to zero."""
        field = GaloisField.from_order(11)
        for size in range(4, 8):
            for points in itertools.combinations(range(11), size):
                eval_set = EvalSet.create(field, points)
                for k in range(2, size):
                    verdict = classify_by_ranks(build_code(eval_set, k)).verdict
                    expected = "MDS" if has_zero_sum_k_subset(eval_set, k) is None else "NMDS"
                    assert verdict == expected, (points, k)

    def test_zero_sum_oracle_with_random_multipliers_over_f13(self) -> None:
        """The same equivalence holds after scaling columns by random nonzero lambda."""
        field = GaloisField.from_order(13)
        rng = random.Random(13)
        for size in range(4, 10):
            for points in itertools.islice(itertools.combinations(range(13), size), 150):
                eval_set = EvalSet.create(field, points)
                multipliers = MultiplierVector.create(rng.randrange(1, 13) for _ in range(size))
                for k in range(2, min(6, size)):
                    verdict = classify_by_ranks(build_code(eval_set, k, multipliers)).verdict
                    expected = "MDS" if has_zero_sum_k_subset(eval_set, k) is None else "NMDS"
                    assert verdict == expected, (points, k, multipliers.values)

    def test_multiplier_nullspace(self) -> None:
        """200 random zero-sum sets: rank 2k - 1 kernel spanned by 1/pi_A."""
        rng = random.Random(200)
        checked = 0
        while checked < 200:
            q = rng.choice((13, 25))
            size = rng.choice((4, 6, 8))
            field = GaloisField.from_order(q)
            head = rng.sample(range(q), size - 1)
            last = field.neg(field.sum(head))
            if last in head:
                continue
            eval_set = EvalSet.create(field, [*head, last])
            matrix = verification_matrix(eval_set)
            assert rank(matrix) == size - 1
            (basis,) = nullspace_basis(matrix)
            expected = [field.inv(pi_of(eval_set, i)) for i in range(size)]
            scale = field.div(expected[0], basis[0])
            assert [field.mul(scale, v) for v in basis] == expected
            if eta_profile(eval_set).uniform:
                assert is_self_dual(build_code(eval_set, size // 2, solve_lambda(eval_set)))
            checked += 1
