"""Unions of cosets of a multiplicative subgroup over ``q = r^2``."""

from __future__ import annotations

from collections.abc import Sequence
from math import gcd

from nmds_selfdual._codes import EvalSet
from nmds_selfdual._exceptions import CosetCollision, WitnessCheckFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual.constructions._base import MIN_LENGTH, EvalSetBuilder, require, square_root_order


def coset_count(r: int, f: int) -> int:
    """``R = (r + 1) / gcd(r + 1, f)``, the number of usable cosets."""
    return (r + 1) // gcd(r + 1, f)


class CosetsBuilder(EvalSetBuilder):
    """``t`` cosets ``beta^i C`` of ``C = <g^e>`` (order ``f``), ``beta = g^(r-1)``.

    For even ``t`` the first ``t/2`` cosets are the witness; for odd ``t``
    the witness takes the half ``beta^i <g^(2e)>`` of every coset.
    """

    family = "cosets"

    @staticmethod
    def validate(q: int, e: int, f: int, t: int, indices: Sequence[int] | None = None) -> None:
        """Arithmetic checks only.

        Raises:
            InvalidParams: If any condition fails.
            CosetCollision: If two indices agree modulo ``R``.
        """
        r = square_root_order(q)
        require(e >= 1 and f >= 1 and e * f == q - 1, f"e*f must equal q-1={q - 1}, got {e}*{f}")
        require(e % 2 == 0, f"e={e} must be even")
        big_r = coset_count(r, f)
        require(1 <= t <= big_r, f"t={t} must lie in [1, R={big_r}]")
        require(t * f % 2 == 0, f"t*f={t * f} must be even")
        require(t * f >= MIN_LENGTH, f"n=t*f={t * f} must be at least {MIN_LENGTH}")
        if indices is not None:
            require(len(indices) == t, f"{len(indices)} coset indices given for t={t}")
            residues = [i % big_r for i in indices]
            require(len(set(residues)) == t, f"indices {tuple(indices)} collide modulo R={big_r}", CosetCollision)

    def build(self, e: int, f: int, t: int, indices: Sequence[int] | None = None) -> EvalSet:
        field = self.field
        q, g = field.q, field.g
        self.validate(q, e, f, t, indices)
        r = square_root_order(q)
        chosen = list(indices) if indices is not None else list(range(t))
        if f < 2:
            raise WitnessCheckFailed("a coset of size 1 never sums to zero")
        if t % 2 and f < 4:
            raise WitnessCheckFailed(f"odd t needs f >= 4 to halve each coset, got f={f}")

        alpha = field.pow(g, e)
        beta = field.pow(g, r - 1)
        subgroup = [field.pow(alpha, j) for j in range(f)]
        cosets = []
        for i in chosen:
            shift = field.pow(beta, i)
            coset = [field.mul(shift, c) for c in subgroup]
            self._expect_product(coset, self._binomial(f, field.pow(shift, f)), f"coset beta^{i} C")
            cosets.append(coset)

        if t % 2 == 0:
            witness = [a for coset in cosets[: t // 2] for a in coset]
        else:
            witness = [
                field.mul(field.pow(beta, i), field.pow(alpha, 2 * j)) for i in chosen for j in range(f // 2)
            ]
        params = {"r": r, "e": e, "f": f, "t": t}
        return self._finish(cosets, witness, params, indices=chosen if indices is not None else None)


def build_cosets(
    field: GaloisField, e: int, f: int, t: int, indices: Sequence[int] | None = None
) -> EvalSet:
    """Shortcut for ``CosetsBuilder(field).build(e, f, t, indices)``."""
    return CosetsBuilder(field).build(e, f, t, indices)
