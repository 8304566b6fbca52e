"""Column multipliers that make the shifted code of a zero-sum set self-dual.

For ``|A| = 2k`` the code ``C(A, k, lambda)`` is self-dual exactly when
``y_i = lambda_i^2`` solves

    sum_i y_i * a_i^j = 0    for j in {0, 1, ..., 2k-2} and j = 2k.

When ``sum(A) = 0`` that system has a one-dimensional solution space spanned
by ``(pi_A(a_i)^-1)_i``, and a solution made of squares exists precisely
when ``eta(pi_A(a_i))`` does not depend on ``i``.
"""

from __future__ import annotations

import logging

from nmds_selfdual._codes import (
    EvalSet,
    LinearCode,
    MultiplierVector,
    build_code,
    classify_by_ranks,
    exponent_matrix,
    has_zero_sum_k_subset,
    is_self_dual,
    pi_of,
)
from nmds_selfdual._config import Budgets
from nmds_selfdual._exceptions import (
    MultiplierError,
    NonUniformCharacter,
    SearchBudgetExceeded,
    SumNotZero,
    VerificationFailed,
)
from nmds_selfdual._linalg import Matrix
from nmds_selfdual.types._base import NmdsModel
from nmds_selfdual.types._classification import Classification

logger = logging.getLogger("nmds_selfdual")


class EtaProfile(NmdsModel):
    """Quadratic character of ``pi_A(a_i)`` for every point."""

    values: tuple[int, ...]

    @property
    def uniform(self) -> bool:
        return len(set(self.values)) <= 1


def eta_profile(eval_set: EvalSet) -> EtaProfile:
    field = eval_set.field
    return EtaProfile(values=tuple(field.eta(pi_of(eval_set, i)) for i in range(eval_set.n)))


def self_duality_exponents(k: int) -> list[int]:
    """``[2k, 2k-2, 2k-3, ..., 1, 0]``: the exponent ``2k - 1`` is absent."""
    return [2 * k, *range(2 * k - 2, -1, -1)]


def verification_matrix(eval_set: EvalSet) -> Matrix:
    """The ``2k x 2k`` matrix whose nullspace holds the squared multipliers.

    Raises:
        MultiplierError: If ``|A|`` is odd.
    """
    n = eval_set.n
    if n % 2:
        raise MultiplierError(f"self-dual codes need an even number of points, got {n}")
    return exponent_matrix(eval_set.field, eval_set.elements, self_duality_exponents(n // 2))


def _residuals(eval_set: EvalSet, squares: list[int]) -> dict[int, int]:
    field = eval_set.field
    k = eval_set.n // 2
    return {
        j: field.sum(field.mul(y, field.pow(a, j)) for y, a in zip(squares, eval_set.elements))
        for j in self_duality_exponents(k)
    }


def solve_lambda(eval_set: EvalSet) -> MultiplierVector:
    """Multipliers ``lambda`` making ``C(A, |A|/2, lambda)`` self-dual.

    Takes ``y_i = pi_A(a_i)^-1``; if ``y_1`` is a non-square every ``y_i``
    is scaled by the primitive element ``g``. Then ``lambda_i`` is the
    smaller square root of ``y_i``. The result is checked against the
    defining system before it is returned.

    Raises:
        MultiplierError: If ``|A|`` is odd or smaller than 2.
        SumNotZero: If the points do not sum to zero.
        NonUniformCharacter: If ``eta(pi_A(a))`` varies over ``A``.
        VerificationFailed: If the computed multipliers do not solve the
            system.
    """
    field = eval_set.field
    n = eval_set.n
    if n < 2 or n % 2:
        raise MultiplierError(f"self-dual codes need an even number of points, got {n}")
    if field.sum(eval_set.elements) != 0:
        raise SumNotZero(f"points sum to {field.sum(eval_set.elements)}, not 0")
    profile = eta_profile(eval_set)
    if not profile.uniform:
        raise NonUniformCharacter(f"eta(pi_A) takes both signs: {profile.values}")

    y = [field.inv(pi_of(eval_set, i)) for i in range(n)]
    scale = 1 if field.eta(y[0]) == 1 else field.g
    squares = [field.mul(scale, v) for v in y]
    values = [field.sqrt(v) for v in squares]

    check = [field.mul(v, v) for v in values]
    failing = {j: r for j, r in _residuals(eval_set, check).items() if r != 0}
    if failing:
        raise VerificationFailed(f"multipliers leave nonzero sums at exponents {sorted(failing)}")
    logger.debug("Solved multipliers for %d points over F_%d (scale=%d)", n, field.q, scale)
    return MultiplierVector.create(values)


def pipeline(eval_set: EvalSet, budgets: Budgets | None = None) -> tuple[LinearCode, Classification]:
    """Build the self-dual code of ``eval_set`` and classify it.

    The verdict is cross-checked against the zero-sum structure of the
    points: a carried witness demands NMDS, and the absence of any
    zero-sum ``k``-subset demands MDS.

    Raises:
        VerificationFailed: If the code is not self-dual or the verdict
            disagrees with the zero-sum structure.
        CombinatorialBudgetExceeded: If the rank scan is too large.
    """
    budgets = budgets or Budgets()
    multipliers = solve_lambda(eval_set)
    k = eval_set.n // 2
    code = build_code(eval_set, k, multipliers)
    if not is_self_dual(code):
        raise VerificationFailed("G G^T is not zero")
    classification = classify_by_ranks(code, budget=budgets.subset_budget)

    if eval_set.witness is not None and classification.verdict != "NMDS":
        raise VerificationFailed(f"set carries a zero-sum witness but the code is {classification.verdict}")
    try:
        zero_sum = has_zero_sum_k_subset(eval_set, k, budget=budgets.search_budget)
    except SearchBudgetExceeded as exc:
        logger.warning("Skipping zero-sum cross-check: %s", exc)
    else:
        expected = "MDS" if zero_sum is None else "NMDS"
        if classification.verdict != expected:
            raise VerificationFailed(
                f"rank scan says {classification.verdict}, zero-sum structure says {expected}"
            )
    return code, classification
