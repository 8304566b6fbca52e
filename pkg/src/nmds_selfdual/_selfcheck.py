"""Invariant suites run by ``nmds-selfdual selfcheck``.

Each check runs at fixed small parameters with a seeded generator, so a
clean build always produces the same report.
"""

from __future__ import annotations

import itertools
import logging
import random
from collections.abc import Callable

from nmds_selfdual._codes import (
    EvalSet,
    build_code,
    classify_by_distance,
    classify_by_ranks,
    det_shifted_vandermonde,
    exponent_matrix,
    has_zero_sum_k_subset,
    pi_of,
    row_exponents,
    shifted_vandermonde_sign,
)
from nmds_selfdual._exceptions import NmdsError
from nmds_selfdual._field import GaloisField
from nmds_selfdual._linalg import Matrix, det, nullspace_basis, rank, transpose
from nmds_selfdual._multipliers import eta_profile, pipeline, solve_lambda, verification_matrix
from nmds_selfdual.constructions import build_from_recipe, field_for_recipe
from nmds_selfdual.types._base import NmdsModel
from nmds_selfdual.types._documents import Recipe

logger = logging.getLogger("nmds_selfdual")

_SEED = 20240917


class CheckResult(NmdsModel):
    name: str
    passed: bool
    detail: str


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def check_field_axioms() -> str:
    for q in (13, 9, 25, 27):
        field = GaloisField.from_order(q)
        squares = sum(1 for x in range(1, q) if field.eta(x) == 1)
        _check(squares == (q - 1) // 2, f"F_{q}: {squares} nonzero squares")
        _check(field.multiplicative_order(field.g) == q - 1, f"F_{q}: g is not primitive")
        for x in range(1, q):
            _check(field.mul(x, field.inv(x)) == 1, f"F_{q}: bad inverse of {x}")
            if field.eta(x) == 1:
                root = field.sqrt(x)
                _check(field.mul(root, root) == x, f"F_{q}: sqrt({x}) squared is not {x}")
        for x, y in itertools.product(range(1, q), repeat=2):
            _check(field.eta(field.mul(x, y)) == field.eta(x) * field.eta(y), f"F_{q}: eta not multiplicative")
    return "F_13, F_9, F_25, F_27"


def check_trace() -> str:
    for q, r in ((9, 3), (25, 5), (81, 9)):
        field = GaloisField.from_order(q)
        image = {field.trace_to_subfield(x, r) for x in field.elements()}
        _check(image == set(field.subfield_elements(r)), f"trace F_{q} -> F_{r} is not onto")
    return "onto for q = 9, 25, 81"


def check_linear_algebra() -> str:
    rng = random.Random(_SEED)
    field = GaloisField.from_order(25)
    for _ in range(50):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        matrix = Matrix.build(field, rows, cols, [rng.randrange(25) for _ in range(rows * cols)])
        _check(rank(matrix) == rank(transpose(matrix)), "row rank differs from column rank")
        _check(len(nullspace_basis(matrix)) == cols - rank(matrix), "rank-nullity fails")
        if rows == cols:
            _check((det(matrix) == 0) == (rank(matrix) < rows), "det and rank disagree")
    return "50 random matrices over F_25"


def check_shifted_determinant() -> str:
    rng = random.Random(_SEED)
    count = 0
    for q in (13, 25, 81):
        field = GaloisField.from_order(q)
        for _ in range(60):
            k = rng.randint(1, 6)
            points = [rng.randrange(q) for _ in range(k)]
            matrix = exponent_matrix(field, points, row_exponents(k))
            expected = det_shifted_vandermonde(field, points)
            if shifted_vandermonde_sign(k) < 0:
                expected = field.neg(expected)
            _check(det(matrix) == expected, f"F_{q}: shifted determinant of {points}")
            count += 1
    return f"{count} tuples"


def check_zero_sum_oracle() -> str:
    field = GaloisField.from_order(7)
    count = 0
    for size in (4, 5):
        for points in itertools.combinations(range(7), size):
            eval_set = EvalSet.create(field, points)
            for k in range(2, size):
                verdict = classify_by_ranks(build_code(eval_set, k)).verdict
                expected = "MDS" if has_zero_sum_k_subset(eval_set, k) is None else "NMDS"
                _check(verdict == expected, f"{points}, k={k}: {verdict} vs {expected}")
                count += 1
    return f"{count} sets over F_7"


def check_distance_oracle() -> str:
    field = GaloisField.from_order(7)
    for points in itertools.combinations(range(7), 5):
        code = build_code(EvalSet.create(field, points), 2)
        by_ranks = classify_by_ranks(code).verdict
        by_distance = classify_by_distance(code).verdict
        _check(by_ranks == by_distance, f"{points}: rank verdict {by_ranks}, distance verdict {by_distance}")
    return "rank and distance verdicts agree on F_7, n=5, k=2"


def check_multiplier_nullspace() -> str:
    rng = random.Random(_SEED)
    solved = 0
    for q in (13, 25):
        field = GaloisField.from_order(q)
        for _ in range(30):
            size = rng.choice((4, 6))
            head = rng.sample(range(q), size - 1)
            last = field.neg(field.sum(head))
            if last in head:
                continue
            eval_set = EvalSet.create(field, [*head, last])
            basis = nullspace_basis(verification_matrix(eval_set))
            _check(len(basis) == 1, "verification matrix does not have rank 2k-1")
            expected = [field.inv(pi_of(eval_set, i)) for i in range(size)]
            scale = field.div(expected[0], basis[0][0])
            _check([field.mul(scale, v) for v in basis[0]] == expected, "nullspace is not spanned by 1/pi_A")
            if eta_profile(eval_set).uniform:
                solve_lambda(eval_set)
                solved += 1
    return f"{solved} uniform sets solved"


_SMALL_RECIPES = (
    Recipe(family="cyclic", params={"q": 13, "n": 6}),
    Recipe(family="cosets", params={"r": 5, "e": 4, "f": 6, "t": 1}),
    Recipe(family="mixed-cosets", params={"r": 3, "s": 1, "t": 1}),
    Recipe(family="subspace", params={"q": 9, "r": 3, "ell": 1, "t": 1}),
    Recipe(family="trace", params={"p": 3, "m": 1, "t": 2, "s": 0}),
)


def check_families() -> str:
    for recipe in _SMALL_RECIPES:
        eval_set = build_from_recipe(field_for_recipe(recipe), recipe)
        _, classification = pipeline(eval_set)
        _check(classification.verdict == "NMDS", f"{recipe.family}: verdict {classification.verdict}")
    return ", ".join(recipe.family for recipe in _SMALL_RECIPES)


CHECKS: dict[str, Callable[[], str]] = {
    "field axioms": check_field_axioms,
    "trace": check_trace,
    "linear algebra": check_linear_algebra,
    "shifted determinant": check_shifted_determinant,
    "zero-sum oracle": check_zero_sum_oracle,
    "distance oracle": check_distance_oracle,
    "multiplier nullspace": check_multiplier_nullspace,
    "families": check_families,
}


def run_selfcheck() -> list[CheckResult]:
    """Run every check and collect the outcomes."""
    results = []
    for name, check in CHECKS.items():
        try:
            detail = check()
        except (AssertionError, NmdsError) as exc:
            logger.debug("Check %r failed", name, exc_info=True)
            results.append(CheckResult(name=name, passed=False, detail=str(exc)))
        else:
            results.append(CheckResult(name=name, passed=True, detail=detail))
    return results
