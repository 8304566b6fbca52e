"""Evaluation sets, generalized Reed-Solomon style codes and their classification.

The central object is the ``k x n`` generator built from an evaluation set
``A = (a_1, ..., a_n)`` and multipliers ``lambda``: row 0 evaluates ``x^k``,
the remaining rows evaluate ``x^(k-2), ..., x, 1``. The exponent ``k - 1`` is
skipped, which is what makes the code near-MDS rather than MDS when ``A``
has a zero-sum ``k``-subset.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from math import comb

from pydantic import model_validator

from nmds_selfdual._exceptions import (
    BudgetExceeded,
    CombinatorialBudgetExceeded,
    DimensionMismatch,
    DuplicatePoint,
    InvalidWitness,
    NotEnoughPoints,
    SearchBudgetExceeded,
    VerificationFailed,
    ZeroMultiplier,
)
from nmds_selfdual._field import GaloisField
from nmds_selfdual._linalg import Matrix, mat_mul, nullspace_basis, rank, transpose
from nmds_selfdual.types._base import FieldBoundModel, NmdsModel
from nmds_selfdual.types._classification import Classification
from nmds_selfdual.types._documents import Recipe

logger = logging.getLogger("nmds_selfdual")

DEFAULT_CODEWORD_BUDGET = 10**7
DEFAULT_SUBSET_BUDGET = 10**6
DEFAULT_SEARCH_BUDGET = 10**7


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


class EvalSet(FieldBoundModel):
    """An ordered tuple of pairwise distinct field elements.

    Attributes:
        elements: The points ``a_1, ..., a_n``.
        witness: Optional indices of a half-size subset summing to zero.
        recipe: How the set was built, if it came from a construction.
    """

    elements: tuple[int, ...]
    witness: tuple[int, ...] | None = None
    recipe: Recipe | None = None

    @classmethod
    def create(
        cls,
        field: GaloisField,
        elements: Iterable[int],
        *,
        witness: Iterable[int] | None = None,
        recipe: Recipe | None = None,
    ) -> EvalSet:
        """Validate and build an evaluation set.

        Args:
            field: The ambient field.
            elements: The points, in order.
            witness: Optional indices into ``elements``.
            recipe: Optional provenance.

        Raises:
            FieldError: If a point is not a field element.
            DuplicatePoint: If two points coincide.
            InvalidWitness: If the witness is not half the size of an
                even-length set, repeats an index, or does not sum to zero.
        """
        points = tuple(field.check(a) for a in elements)
        seen: dict[int, int] = {}
        for index, a in enumerate(points):
            if a in seen:
                raise DuplicatePoint(f"point {a} appears at positions {seen[a]} and {index}")
            seen[a] = index

        chosen: tuple[int, ...] | None = None
        if witness is not None:
            chosen = tuple(sorted(witness))
            n = len(points)
            if n % 2 or len(chosen) != n // 2:
                raise InvalidWitness(f"witness must hold n/2 indices of an even-length set (n={n})")
            if len(set(chosen)) != len(chosen) or any(not 0 <= i < n for i in chosen):
                raise InvalidWitness(f"witness indices {chosen} are not distinct positions")
            if field.sum(points[i] for i in chosen) != 0:
                raise InvalidWitness("witness does not sum to zero")

        return cls.model_construct(elements=points, witness=chosen, recipe=recipe)._bind(field)

    @property
    def n(self) -> int:
        return len(self.elements)

    def witness_elements(self) -> tuple[int, ...]:
        if self.witness is None:
            return ()
        return tuple(self.elements[i] for i in self.witness)


class MultiplierVector(NmdsModel):
    """Column multipliers ``lambda_1, ..., lambda_n``, all nonzero."""

    values: tuple[int, ...]

    @model_validator(mode="after")
    def _check_nonzero(self) -> MultiplierVector:
        if any(v == 0 for v in self.values):
            raise ZeroMultiplier("multipliers must be nonzero")
        return self

    @classmethod
    def create(cls, values: Iterable[int]) -> MultiplierVector:
        """Build a multiplier vector.

        Raises:
            ZeroMultiplier: If any value is zero.
        """
        values = tuple(values)
        if any(v == 0 for v in values):
            raise ZeroMultiplier(f"multiplier at position {values.index(0)} is zero")
        return cls.model_construct(values=values)

    @classmethod
    def ones(cls, n: int) -> MultiplierVector:
        return cls.model_construct(values=(1,) * n)


class LinearCode(FieldBoundModel):
    """A linear ``[n, k]`` code given by a generator matrix.

    ``eval_set`` and ``multipliers`` are set when the code came out of
    :func:`build_code`.
    """

    n: int
    k: int
    generator: Matrix
    eval_set: EvalSet | None = None
    multipliers: MultiplierVector | None = None

    @classmethod
    def from_generator(
        cls,
        generator: Matrix,
        *,
        eval_set: EvalSet | None = None,
        multipliers: MultiplierVector | None = None,
    ) -> LinearCode:
        """Wrap a ``k x n`` generator. The rank is not checked here."""
        return cls.model_construct(
            n=generator.cols,
            k=generator.rows,
            generator=generator,
            eval_set=eval_set,
            multipliers=multipliers,
        )._bind(generator.field)

    @property
    def recipe(self) -> Recipe | None:
        return self.eval_set.recipe if self.eval_set is not None else None


class SelfDualityCheck(NmdsModel):
    """Result of :func:`is_self_dual`, truthy when the code is self-dual.

    ``gram`` is ``G G^T``, which must vanish, and ``generator_rank`` must
    equal ``n / 2``.
    """

    holds: bool
    gram: Matrix
    generator_rank: int

    def __bool__(self) -> bool:
        return self.holds


# ---------------------------------------------------------------------------
# Building codes
# ---------------------------------------------------------------------------


def row_exponents(k: int) -> list[int]:
    """Row exponents of the shifted generator: ``[k, k-2, ..., 1, 0]``.

    For ``k == 1`` the single row evaluates ``x``.
    """
    if k < 1:
        raise NotEnoughPoints(f"dimension must be at least 1, got {k}")
    if k == 1:
        return [1]
    return [k, *range(k - 2, -1, -1)]


def exponent_matrix(
    field: GaloisField,
    points: Sequence[int],
    exponents: Sequence[int],
    multipliers: Sequence[int] | None = None,
) -> Matrix:
    """The matrix with entry ``(i, j) = lambda_j * a_j ** e_i``."""
    scale = multipliers if multipliers is not None else [1] * len(points)
    entries = [field.mul(c, field.pow(a, e)) for e in exponents for a, c in zip(points, scale)]
    return Matrix.build(field, len(exponents), len(points), entries)


def _check_inputs(eval_set: EvalSet, k: int, multipliers: MultiplierVector | None) -> MultiplierVector:
    n = eval_set.n
    if k < 1 or n <= k:
        raise NotEnoughPoints(f"need n > k >= 1, got n={n}, k={k}")
    if multipliers is None:
        return MultiplierVector.ones(n)
    if len(multipliers.values) != n:
        raise DimensionMismatch(f"{len(multipliers.values)} multipliers for {n} points")
    return multipliers


def build_code(eval_set: EvalSet, k: int, multipliers: MultiplierVector | None = None) -> LinearCode:
    """The shifted ``[n, k]`` code of ``eval_set`` with column multipliers.

    Raises:
        NotEnoughPoints: Unless ``n > k >= 1``.
        DimensionMismatch: If the multiplier vector has the wrong length.
        VerificationFailed: If the generator does not have rank ``k``.
    """
    field = eval_set.field
    multipliers = _check_inputs(eval_set, k, multipliers)
    generator = exponent_matrix(field, eval_set.elements, row_exponents(k), multipliers.values)
    generator_rank = rank(generator)
    if generator_rank != k:
        raise VerificationFailed(f"generator has rank {generator_rank}, expected {k}")
    logger.debug("Built [%d, %d] code over F_%d", eval_set.n, k, field.q)
    return LinearCode.from_generator(generator, eval_set=eval_set, multipliers=multipliers)


def build_grs_code(eval_set: EvalSet, k: int, multipliers: MultiplierVector | None = None) -> LinearCode:
    """The generalized Reed-Solomon ``[n, k]`` code (rows ``1, x, ..., x^(k-1)``).

    Always MDS; used as a reference point by the classifier tests.
    """
    field = eval_set.field
    multipliers = _check_inputs(eval_set, k, multipliers)
    generator = exponent_matrix(field, eval_set.elements, range(k), multipliers.values)
    return LinearCode.from_generator(generator, eval_set=eval_set, multipliers=multipliers)


def dual_code(code: LinearCode) -> LinearCode:
    """The dual code, generated by a basis of the right nullspace of ``G``."""
    basis = nullspace_basis(code.generator)
    if not basis:
        raise NotEnoughPoints("the dual of a full-length code is zero")
    return LinearCode.from_generator(Matrix.from_rows(code.field, basis))


def det_shifted_vandermonde(field: GaloisField, points: Sequence[int]) -> int:
    """``(a_1 + ... + a_k) * prod_{s < t} (a_t - a_s)``.

    Up to the sign ``shifted_vandermonde_sign(k)`` this is the determinant
    of the ``k x k`` shifted matrix on ``points``.
    """
    total = field.sum(points)
    product = 1
    for t in range(len(points)):
        for s in range(t):
            product = field.mul(product, field.sub(points[t], points[s]))
    return field.mul(total, product)


def shifted_vandermonde_sign(k: int) -> int:
    """Sign relating the shifted determinant to :func:`det_shifted_vandermonde`.

    The rows run in descending exponent order, a reversal of
    ``k(k-1)/2`` transpositions away from the ascending layout. The value
    is cross-checked against direct determinants in
    ``tests/test_codes.py::TestShiftedDeterminant::test_sign_is_constant_per_k``
    and by the "shifted determinant" self-check.
    """
    return -1 if (k * (k - 1) // 2) % 2 else 1


def pi_of(eval_set: EvalSet, i: int) -> int:
    """``prod_{j != i} (a_i - a_j)``."""
    field = eval_set.field
    a = eval_set.elements[i]
    return field.prod(field.sub(a, b) for j, b in enumerate(eval_set.elements) if j != i)


def is_self_dual(code: LinearCode) -> SelfDualityCheck:
    """Check ``n == 2k``, ``rank(G) == k`` and ``G G^T == 0``."""
    gram = mat_mul(code.generator, transpose(code.generator))
    generator_rank = rank(code.generator)
    holds = code.n == 2 * code.k and generator_rank == code.k and not any(gram.entries)
    return SelfDualityCheck.model_construct(holds=holds, gram=gram, generator_rank=generator_rank)


# ---------------------------------------------------------------------------
# Minimum distance
# ---------------------------------------------------------------------------


def min_distance_bruteforce(code: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> int:
    """Minimum Hamming weight over all nonzero codewords.

    Walks one message per projective point (first nonzero coordinate 1),
    so roughly ``q^k / (q - 1)`` codewords are generated.

    Raises:
        BudgetExceeded: If ``q**k`` exceeds ``budget``.
    """
    field = code.field
    q, k, n = field.q, code.k, code.n
    required = q**k
    if required > budget:
        raise BudgetExceeded(f"minimum distance of a [{n}, {k}] code over F_{q}", required=required, budget=budget)

    rows = [code.generator.row(i) for i in range(k)]
    scaled = [[tuple(field.mul(c, v) for v in row) for c in range(q)] for row in rows]
    add = field.add
    best = n

    def walk(position: int, word: tuple[int, ...]) -> None:
        nonlocal best
        if position == k:
            weight = n - word.count(0)
            if weight < best:
                best = weight
            return
        walk(position + 1, word)
        for c in range(1, q):
            walk(position + 1, tuple(add(x, y) for x, y in zip(word, scaled[position][c])))

    for lead in range(k):
        walk(lead + 1, scaled[lead][1])
        if best == 1:
            break
    return best


# ---------------------------------------------------------------------------
# Rank-based classification
# ---------------------------------------------------------------------------


class _RankScan:
    """Depth-first walk over column subsets in lexicographic order.

    Each prefix carries a basis of the vectors orthogonal to its span. A
    new column is dependent exactly when every such vector kills it, so
    at depth ``k`` a rank test is one dot product.
    """

    def __init__(self, code: LinearCode) -> None:
        self.field = code.field
        self.k = code.k
        self.n = code.n
        self.columns = [code.generator.column(j) for j in range(code.n)]
        self.dependent: list[tuple[int, ...]] = []
        self.full_rank = 0
        self.clause_one: tuple[int, ...] | None = None

    def _dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        add, mul = self.field.add, self.field.mul
        total = 0
        for a, b in zip(u, v):
            if a and b:
                total = add(total, mul(a, b))
        return total

    def run(self) -> None:
        identity = [[int(i == j) for j in range(self.k)] for i in range(self.k)]
        self._descend((), identity)

    def _descend(self, chosen: tuple[int, ...], annihilator: list[list[int]]) -> bool:
        """Returns ``True`` to abort the walk."""
        field = self.field
        k = self.k
        size = len(chosen) + 1
        start = chosen[-1] + 1 if chosen else 0
        # below depth k - 1 leave room to reach a (k - 1)-subset
        stop = self.n - max(0, k - 1 - size)
        for j in range(start, stop):
            column = self.columns[j]
            if size == k:
                if self._dot(annihilator[0], column):
                    self.full_rank += 1
                else:
                    self.dependent.append((*chosen, j))
                continue
            products = [self._dot(u, column) for u in annihilator]
            pivot = next((i for i, x in enumerate(products) if x), None)
            if pivot is None:
                self.clause_one = (*chosen, j)
                return True
            base = annihilator[pivot]
            scale = field.inv(products[pivot])
            narrowed = []
            for i, (u, c) in enumerate(zip(annihilator, products)):
                if i == pivot:
                    continue
                if c:
                    factor = field.mul(c, scale)
                    u = [field.sub(a, field.mul(factor, b)) for a, b in zip(u, base)]
                narrowed.append(u)
            if self._descend((*chosen, j), narrowed):
                return True
        return False


def _pad_subset(subset: tuple[int, ...], size: int, n: int) -> tuple[int, ...]:
    """Extend ``subset`` with the smallest unused indices up to ``size``."""
    extra = [j for j in range(n) if j not in subset][: max(0, size - len(subset))]
    return tuple(sorted((*subset, *extra)))


def _rank_of(code: LinearCode, subset: Sequence[int]) -> int:
    return rank(code.generator.select_columns(subset))


def classify_by_ranks(code: LinearCode, budget: int = DEFAULT_SUBSET_BUDGET) -> Classification:
    """Classify a code as MDS, NMDS or OTHER from column-subset ranks.

    NMDS means: every ``k - 1`` columns are independent, some ``k`` columns
    are dependent, and every ``k + 1`` columns have rank ``k``. A code that
    is not NMDS is MDS when every ``k`` columns are independent, and OTHER
    otherwise.

    Raises:
        CombinatorialBudgetExceeded: If ``C(n, k)`` or ``C(n, k + 1)``
            exceeds ``budget``.
    """
    n, k = code.n, code.k
    required = max(comb(n, k), comb(n, k + 1))
    if required > budget:
        raise CombinatorialBudgetExceeded(f"rank scan of a [{n}, {k}] code", required=required, budget=budget)

    scan = _RankScan(code)
    scan.run()

    if scan.clause_one is not None:
        evidence = _pad_subset(scan.clause_one, k - 1, n)
        logger.debug("Columns %s are dependent; not NMDS", evidence)
        return Classification(
            verdict="OTHER",
            evidence=evidence,
            evidence_rank=_rank_of(code, evidence),
            violated="k-1 columns dependent",
            subsets_checked=scan.full_rank + len(scan.dependent),
        )

    checked = scan.full_rank + len(scan.dependent)
    if not scan.dependent:
        return Classification(verdict="MDS", d=n - k + 1, subsets_checked=checked)

    masks = {sum(1 << j for j in subset) for subset in scan.dependent}
    seen: set[int] = set()
    for subset in scan.dependent:
        mask = sum(1 << j for j in subset)
        for extra in range(n):
            bigger = mask | (1 << extra)
            if bigger == mask or bigger in seen:
                continue
            seen.add(bigger)
            members = [j for j in range(n) if bigger >> j & 1]
            if all(bigger & ~(1 << j) in masks for j in members):
                evidence = tuple(members)
                return Classification(
                    verdict="OTHER",
                    evidence=evidence,
                    evidence_rank=_rank_of(code, evidence),
                    violated="k+1 columns of rank below k",
                    dependent_count=len(scan.dependent),
                    subsets_checked=checked,
                    dependent_subsets=tuple(scan.dependent),
                )

    first = scan.dependent[0]
    return Classification(
        verdict="NMDS",
        d=n - k,
        evidence=first,
        evidence_rank=_rank_of(code, first),
        dependent_count=len(scan.dependent),
        subsets_checked=checked,
        dependent_subsets=tuple(scan.dependent),
    )


def classify_by_distance(code: LinearCode, budget: int = DEFAULT_CODEWORD_BUDGET) -> Classification:
    """Classify from the minimum distances of the code and its dual.

    MDS when ``d == n - k + 1``; NMDS when ``d == n - k`` and the dual has
    distance ``k``; OTHER otherwise.

    Raises:
        BudgetExceeded: If either enumeration exceeds ``budget``.
    """
    n, k = code.n, code.k
    d = min_distance_bruteforce(code, budget)
    if d == n - k + 1:
        return Classification(verdict="MDS", d=d)
    dual_d = min_distance_bruteforce(dual_code(code), budget)
    verdict = "NMDS" if d == n - k and dual_d == k else "OTHER"
    return Classification(verdict=verdict, d=d, dual_d=dual_d)


# ---------------------------------------------------------------------------
# Zero-sum subsets
# ---------------------------------------------------------------------------


def has_zero_sum_k_subset(
    eval_set: EvalSet, k: int, budget: int = DEFAULT_SEARCH_BUDGET
) -> tuple[int, ...] | None:
    """The lexicographically first ``k``-subset of indices summing to zero.

    Prefixes of size ``k - 1`` are enumerated in order; the last index is
    found by lookup of the negated prefix sum.

    Raises:
        SearchBudgetExceeded: If ``C(n, k - 1)`` exceeds ``budget``.
    """
    field = eval_set.field
    points = eval_set.elements
    n = len(points)
    if k < 1 or k > n:
        return None
    required = comb(n, k - 1)
    if required > budget:
        raise SearchBudgetExceeded(f"zero-sum {k}-subsets of {n} points", required=required, budget=budget)

    position = {a: i for i, a in enumerate(points)}

    def search(chosen: tuple[int, ...], total: int) -> tuple[int, ...] | None:
        if len(chosen) == k - 1:
            last = position.get(field.neg(total))
            if last is not None and (not chosen or last > chosen[-1]):
                return (*chosen, last)
            return None
        start = chosen[-1] + 1 if chosen else 0
        for j in range(start, n - (k - 1 - len(chosen)) + 1):
            found = search((*chosen, j), field.add(total, points[j]))
            if found is not None:
                return found
        return None

    return search((), 0)
