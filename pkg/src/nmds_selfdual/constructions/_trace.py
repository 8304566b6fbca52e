"""Fibers of the trace F_{r^2} -> F_r together with cosets of an F_p-subspace."""

from __future__ import annotations

import itertools

from nmds_selfdual._codes import EvalSet
from nmds_selfdual._exceptions import RepresentativePairingImpossible, VerificationFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual.constructions._base import EvalSetBuilder, odd_prime_power, require


def subspace_dimension(p: int, t: int) -> int:
    """Smallest ``t'`` with ``p**t' >= t``."""
    dimension = 0
    while p**dimension < t:
        dimension += 1
    return dimension


def trace_length(p: int, m: int, t: int, s: int) -> int:
    return t * p**m + s * p ** subspace_dimension(p, t)


class TraceBuilder(EvalSetBuilder):
    """``t`` trace fibers ``T_i`` and ``s`` additive cosets ``b_j + H``.

    Over ``q = r^2`` with ``r = p^m``: ``H`` is the F_p-span of
    ``1, rho, ..., rho^(t'-1)`` for ``rho = g^(r+1)`` (a primitive element
    of F_r), ``T_i`` is the set of ``x`` with ``x + x^r = h_i`` for the
    ``t`` smallest elements ``h_i`` of ``H``, and the ``b_j`` come in
    ``+/-`` pairs of coset representatives of F_r / H. Half the fibers and
    half the cosets form the witness.
    """

    family = "trace"

    @staticmethod
    def validate(p: int, m: int, t: int, s: int) -> None:
        """Arithmetic checks only.

        Raises:
            InvalidParams: If any condition fails.
        """
        require(odd_prime_power(p, "p")[1] == 1, f"p={p} must be an odd prime")
        require(m >= 1, f"m={m} must be positive")
        r = p**m
        require(t % 2 == 0, f"t={t} must be even")
        require(s % 2 == 0, f"s={s} must be even")
        require(2 <= t <= r, f"t={t} must lie in [2, r={r}]")
        dimension = subspace_dimension(p, t)
        require(0 <= s <= p ** (m - dimension) - 1, f"s={s} must lie in [0, {p ** (m - dimension) - 1}]")

    def build(self, t: int, s: int) -> EvalSet:
        field = self.field
        p = field.p
        require(field.m % 2 == 0, f"q={field.q} is not a square")
        m = field.m // 2
        r = p**m
        self.validate(p, m, t, s)
        dimension = subspace_dimension(p, t)

        rho = field.pow(field.g, r + 1)
        basis = [field.pow(rho, i) for i in range(dimension)]
        subspace = sorted(
            {
                field.sum(field.mul(c, b) for c, b in zip(coeffs, basis))
                for coeffs in itertools.product(range(p), repeat=dimension)
            }
        )
        levels = subspace[:t]

        fibers: dict[int, list[int]] = {h: [] for h in levels}
        for x in field.elements():
            value = field.trace_to_subfield(x, r)
            if value in fibers:
                fibers[value].append(x)
        parts: list[list[int]] = []
        for h in levels:
            fiber = fibers[h]
            if len(fiber) != r:
                raise VerificationFailed(f"trace fiber over {h} has {len(fiber)} points, expected {r}")
            expected = [field.neg(h), 1, *([0] * (r - 2)), 1]
            self._expect_product(fiber, expected, f"trace fiber over {h}")
            parts.append(fiber)

        shifts = self._paired_representatives(field.subfield_elements(r), subspace, s)
        cosets = [[field.add(b, h) for h in subspace] for b in shifts]
        witness = [a for part in parts[: t // 2] for a in part] + [a for part in cosets[: s // 2] for a in part]
        return self._finish([*parts, *cosets], witness, {"p": p, "m": m, "t": t, "s": s})

    def _paired_representatives(self, subfield: list[int], subspace: list[int], s: int) -> list[int]:
        """``b_1, ..., b_s`` with ``b_(s/2+i) = -b_i``, from distinct cosets of ``H``.

        Raises:
            RepresentativePairingImpossible: If fewer than ``s/2`` pairs exist.
        """
        field = self.field
        representative: dict[int, int] = {}
        for x in subfield:
            if x not in representative:
                for h in subspace:
                    representative[field.add(x, h)] = x
        used = {0}
        chosen: list[int] = []
        for b in sorted(set(representative.values())):
            if len(chosen) == s // 2:
                break
            mirror = representative[field.neg(b)]
            if b in used or mirror in used:
                continue
            used.update((b, mirror))
            chosen.append(b)
        if len(chosen) < s // 2:
            raise RepresentativePairingImpossible(f"only {len(chosen)} +/- coset pairs available, need {s // 2}")
        return chosen + [field.neg(b) for b in chosen]


def build_trace_fibers(field: GaloisField, t: int, s: int) -> EvalSet:
    """Shortcut for ``TraceBuilder(field).build(t, s)``."""
    return TraceBuilder(field).build(t, s)
