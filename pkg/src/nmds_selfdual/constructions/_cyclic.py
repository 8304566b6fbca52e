"""Multiplicative subgroups of F_q* and pairs of their cosets."""

from __future__ import annotations

from nmds_selfdual._codes import EvalSet
from nmds_selfdual._exceptions import WitnessCheckFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual.constructions._base import MIN_LENGTH, EvalSetBuilder, odd_prime_power, require


class CyclicBuilder(EvalSetBuilder):
    """Sets of length ``n | q - 1`` over ``q = 1 (mod 4)``.

    * ``n = 2 (mod 4)``: the subgroup ``<theta>`` of order ``n``; its even
      powers form the witness.
    * ``n = 0 (mod 4)``: ``<theta>`` of order ``n/2`` together with the
      coset ``beta <theta>``, where ``beta`` is the first even power of
      ``g`` outside ``<theta>``; the subgroup itself is the witness.
    """

    family = "cyclic"

    @staticmethod
    def validate(q: int, n: int) -> None:
        """Arithmetic checks only; no field is needed.

        Raises:
            InvalidParams: If any condition fails.
        """
        odd_prime_power(q, "q")
        require(q % 4 == 1, f"q={q} must be 1 mod 4")
        require(n % 2 == 0, f"n={n} must be even")
        require(n >= MIN_LENGTH, f"n={n} must be at least {MIN_LENGTH}")
        require((q - 1) % n == 0, f"n={n} must divide q-1={q - 1}")
        require(n < q - 1, f"n={n} must be smaller than q-1={q - 1}")

    def build(self, n: int) -> EvalSet:
        field = self.field
        q, g = field.q, field.g
        self.validate(q, n)
        params = {"q": q, "n": n}

        if n % 4 == 2:
            theta = field.pow(g, (q - 1) // n)
            points = [field.pow(theta, i) for i in range(1, n + 1)]
            self._expect_product(points, self._binomial(n, 1), f"subgroup of order {n}")
            witness = [field.pow(theta, 2 * i) for i in range(1, n // 2 + 1)]
            return self._finish([points], witness, params)

        half = n // 2
        theta = field.pow(g, (q - 1) // half)
        subgroup = [field.pow(theta, i) for i in range(1, half + 1)]
        members = set(subgroup)
        beta = next(
            (field.pow(g, 2 * j) for j in range(1, (q - 1) // 2) if field.pow(g, 2 * j) not in members),
            None,
        )
        if beta is None:
            raise WitnessCheckFailed(f"every square of F_{q} lies in the subgroup of order {half}")
        coset = [field.mul(beta, a) for a in subgroup]
        self._expect_product(subgroup, self._binomial(half, 1), f"subgroup of order {half}")
        self._expect_product(coset, self._binomial(half, field.pow(beta, half)), "second coset")
        return self._finish([subgroup, coset], subgroup, params)


def build_cyclic(field: GaloisField, n: int) -> EvalSet:
    """Shortcut for ``CyclicBuilder(field).build(n)``."""
    return CyclicBuilder(field).build(n)
