"""Additive cosets of an F_r-subspace of F_q."""

from __future__ import annotations

import itertools
import logging

from nmds_selfdual._codes import DEFAULT_SEARCH_BUDGET, EvalSet
from nmds_selfdual._exceptions import SearchBudgetExceeded, WitnessCheckFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual.constructions._base import MIN_LENGTH, EvalSetBuilder, odd_prime_power, require

logger = logging.getLogger("nmds_selfdual")


def subspace_length(r: int, ell: int, t: int) -> int:
    return 2 * t * r**ell


class SubspaceBuilder(EvalSetBuilder):
    """``2t`` cosets ``H + xi_i * alpha`` of an ``ell``-dimensional F_r-subspace ``H``.

    ``H`` is spanned over F_r by ``1, g, ..., g^(ell-1)`` and ``alpha`` is the
    smallest element outside ``H``. The scalars ``xi_i`` run through F_r
    as ``0, 1, -1, 2, -2, ...`` and then the rest of F_r by encoding. The
    first ``t`` cosets are the witness.

    With ``ell = 0`` every coset is a single point and the ordering no
    longer guarantees zero sums, so ``2t`` scalars are searched for
    instead.
    """

    family = "subspace"

    def __init__(self, field: GaloisField, *, search_budget: int = DEFAULT_SEARCH_BUDGET) -> None:
        super().__init__(field)
        self._search_budget = search_budget

    @staticmethod
    def validate(q: int, r: int, ell: int, t: int) -> None:
        """Arithmetic checks only.

        Raises:
            InvalidParams: If any condition fails.
        """
        p, m = odd_prime_power(q, "q")
        require(m % 2 == 0, f"q={q} must be an even power of its characteristic")
        split = odd_prime_power(r, "r")
        require(split[0] == p, f"r={r} must be a power of the characteristic {p}")
        degree = split[1]
        require((m // 2) % degree == 0, f"log_p(r)={degree} must divide m/2={m // 2}")
        require(0 <= ell < m // degree, f"ell={ell} must lie in [0, {m // degree - 1}]")
        require(1 <= t <= (r - 1) // 2, f"t={t} must lie in [1, {(r - 1) // 2}]")
        require(subspace_length(r, ell, t) >= MIN_LENGTH, f"n=2*t*r^ell must be at least {MIN_LENGTH}")

    def scalar_order(self, r: int) -> list[int]:
        """F_r ordered as ``0, 1, -1, 2, -2, ...`` then the rest by encoding."""
        field = self.field
        ordered = [0]
        for c in range(1, (field.p + 1) // 2):
            ordered += [c, field.neg(c)]
        ordered += [x for x in field.subfield_elements(r) if x not in set(ordered)]
        return ordered

    def build(self, r: int, ell: int, t: int) -> EvalSet:
        field = self.field
        self.validate(field.q, r, ell, t)
        scalars = self.scalar_order(r)
        params = {"q": field.q, "r": r, "ell": ell, "t": t}

        if ell == 0:
            parts, witness = self._search_scalars(scalars, t)
            return self._finish(parts, witness, params)

        basis = [field.pow(field.g, i) for i in range(ell)]
        combos = itertools.product(scalars, repeat=ell)
        subspace = sorted({field.sum(field.mul(c, b) for c, b in zip(coeffs, basis)) for coeffs in combos})
        if len(subspace) != r**ell:
            raise WitnessCheckFailed(f"powers 1..g^{ell - 1} are not independent over F_{r}")
        members = set(subspace)
        alpha = next(x for x in field.elements() if x not in members)

        parts = []
        for xi in scalars[: 2 * t]:
            shift = field.mul(xi, alpha)
            parts.append([field.add(h, shift) for h in subspace])
        witness = [a for part in parts[:t] for a in part]
        return self._finish(parts, witness, params)

    def _search_scalars(self, scalars: list[int], t: int) -> tuple[list[list[int]], list[int]]:
        """First ``2t`` scalars (in scalar order) summing to zero with a zero-sum half.

        Raises:
            SearchBudgetExceeded: If the search runs past its budget.
            WitnessCheckFailed: If no such choice exists.
        """
        field = self.field
        examined = 0
        for chosen in itertools.combinations(scalars, 2 * t):
            examined += 1
            if examined > self._search_budget:
                raise SearchBudgetExceeded(
                    f"scalar search for 2t={2 * t} points", required=examined, budget=self._search_budget
                )
            if field.sum(chosen) != 0:
                continue
            half = next((h for h in itertools.combinations(chosen, t) if field.sum(h) == 0), None)
            if half is not None:
                logger.debug("Scalar search settled after %d candidates", examined)
                return [[x] for x in chosen], list(half)
        raise WitnessCheckFailed(f"no {2 * t} elements of the subfield admit a zero-sum half")


def build_subspace_cosets(field: GaloisField, r: int, ell: int, t: int) -> EvalSet:
    """Shortcut for ``SubspaceBuilder(field).build(r, ell, t)``."""
    return SubspaceBuilder(field).build(r, ell, t)
