"""Cosets of the subgroups of orders ``r - 1`` and ``r + 1`` over ``q = r^2``."""

from __future__ import annotations

from math import isqrt

from nmds_selfdual._codes import EvalSet
from nmds_selfdual._exceptions import ParityViolation, VerificationFailed, WitnessCheckFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual.constructions._base import EvalSetBuilder, odd_prime_power, require


def mixed_length(r: int, s: int, t: int) -> int:
    return s * (r - 1) + t * (r + 1)


def parity_holds(r: int, s: int) -> bool:
    """``r = 1 (mod 4)`` needs ``s`` even, ``r = 3 (mod 4)`` needs ``s`` odd."""
    return (r % 4 == 1 and s % 2 == 0) or (r % 4 == 3 and s % 2 == 1)


class MixedCosetsBuilder(EvalSetBuilder):
    """``s`` cosets ``g^(2i) <gamma>`` and ``t`` cosets ``g^(2j-1) <beta>``.

    ``gamma = g^(r+1)`` has order ``r - 1`` and ``beta = g^(r-1)`` has order
    ``r + 1``. The witness keeps the even powers inside every coset; over
    F_9 the cosets are too small for that and the witness is
    ``{a, a^2, a^7}`` for the smallest root ``a`` of ``x^2 - x - 1``.
    """

    family = "mixed-cosets"

    @staticmethod
    def validate(r: int, s: int, t: int) -> None:
        """Arithmetic checks only.

        Raises:
            InvalidParams: If ``r``, ``s`` or ``t`` is out of range.
            ParityViolation: If the parity of ``s`` does not match ``r``.
        """
        odd_prime_power(r, "r")
        require(1 <= s <= (r + 1) // 2, f"s={s} must lie in [1, {(r + 1) // 2}]")
        require(1 <= t <= (r - 1) // 2, f"t={t} must lie in [1, {(r - 1) // 2}]")
        require(
            parity_holds(r, s),
            f"r={r} is {r % 4} mod 4, so s must be {'even' if r % 4 == 1 else 'odd'} (got s={s})",
            ParityViolation,
        )

    def build(self, s: int, t: int) -> EvalSet:
        field = self.field
        q, g = field.q, field.g
        r = isqrt(q)
        require(r * r == q, f"q={q} is not a square")
        self.validate(r, s, t)

        gamma = field.pow(g, r + 1)
        beta = field.pow(g, r - 1)
        gamma_group = [field.pow(gamma, j) for j in range(r - 1)]
        beta_group = [field.pow(beta, j) for j in range(r + 1)]

        first: list[list[int]] = []
        for i in range(1, s + 1):
            shift = field.pow(g, 2 * i)
            coset = [field.mul(shift, c) for c in gamma_group]
            self._expect_product(coset, self._binomial(r - 1, field.pow(g, 2 * i * (r - 1))), f"f_{i}")
            first.append(coset)
        second: list[list[int]] = []
        for j in range(1, t + 1):
            shift = field.pow(g, 2 * j - 1)
            coset = [field.mul(shift, c) for c in beta_group]
            self._expect_product(coset, self._binomial(r + 1, field.pow(g, (2 * j - 1) * (r + 1))), f"g_{j}")
            second.append(coset)

        squares = {a for coset in first for a in coset}
        if squares & {a for coset in second for a in coset}:
            raise VerificationFailed("square cosets meet non-square cosets")
        self._check_characters(r, beta)

        if r == 3:
            witness = self._small_witness()
        else:
            witness = [
                field.mul(field.pow(g, 2 * i), field.pow(gamma, 2 * j))
                for i in range(1, s + 1)
                for j in range((r - 1) // 2)
            ] + [
                field.mul(field.pow(g, 2 * j - 1), field.pow(beta, 2 * ell))
                for j in range(1, t + 1)
                for ell in range((r + 1) // 2)
            ]
        return self._finish([*first, *second], witness, {"r": r, "s": s, "t": t})

    def _check_characters(self, r: int, beta: int) -> None:
        """Spot-check the two character identities the construction rests on.

        ``eta(1 - beta^(2i)) = eta(g^((r+1)/2))`` whenever ``beta^(2i) != 1``
        and ``eta(beta^(2l-1) - 1) = eta(g^((r-1)/2))``.
        """
        field = self.field
        half = (r + 1) // 2
        target = field.eta(field.pow(field.g, half))
        for i in [*range(-half, 0), *range(1, half + 1)]:
            power = field.pow(beta, 2 * i)
            if power != 1 and field.eta(field.sub(1, power)) != target:
                raise VerificationFailed(f"eta(1 - beta^{2 * i}) differs from eta(g^{half})")
        target = field.eta(field.pow(field.g, (r - 1) // 2))
        for ell in range(1, half + 1):
            if field.eta(field.sub(field.pow(beta, 2 * ell - 1), 1)) != target:
                raise VerificationFailed(f"eta(beta^{2 * ell - 1} - 1) differs from eta(g^{(r - 1) // 2})")

    def _small_witness(self) -> list[int]:
        field = self.field
        root = next((a for a in field.elements() if field.mul(a, a) == field.add(a, 1)), None)
        if root is None:
            raise WitnessCheckFailed("x^2 - x - 1 has no root in F_9")
        return [root, field.pow(root, 2), field.pow(root, 7)]


def build_mixed_cosets(field: GaloisField, s: int, t: int) -> EvalSet:
    """Shortcut for ``MixedCosetsBuilder(field).build(s, t)``."""
    return MixedCosetsBuilder(field).build(s, t)
