"""Base class for evaluation-set builders."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from typing import ClassVar

from nmds_selfdual._codes import EvalSet, pi_of
from nmds_selfdual._exceptions import (
    CosetCollision,
    InvalidParams,
    NonUniformCharacter,
    VerificationFailed,
    WitnessCheckFailed,
)
from nmds_selfdual._field import GaloisField, prime_power
from nmds_selfdual.types._documents import Recipe

logger = logging.getLogger("nmds_selfdual")

MIN_LENGTH = 4


def require(condition: bool, message: str, exc: type[InvalidParams] = InvalidParams) -> None:
    """Raise ``exc(message)`` unless ``condition`` holds."""
    if not condition:
        raise exc(message)


def odd_prime_power(value: int, name: str) -> tuple[int, int]:
    """Split ``value = p**m`` with ``p`` an odd prime.

    Raises:
        InvalidParams: Otherwise.
    """
    split = prime_power(value)
    require(split is not None and split[0] != 2, f"{name}={value} must be an odd prime power")
    return split  # type: ignore[return-value]


def square_root_order(q: int) -> int:
    """The ``r`` with ``q == r * r`` for an odd prime power ``r``.

    Raises:
        InvalidParams: If ``q`` is not such a square.
    """
    p, m = odd_prime_power(q, "q")
    require(m % 2 == 0, f"q={q} is not the square of a prime power")
    return p ** (m // 2)


class EvalSetBuilder:
    """Base class for the construction families.

    Holds the field and runs the checks every family shares. Subclasses
    set ``family`` and implement ``build(**params)``, returning
    :meth:`_finish` on their points and witness.
    """

    family: ClassVar[str]

    def __init__(self, field: GaloisField) -> None:
        self._field = field

    @property
    def field(self) -> GaloisField:
        return self._field

    # ------------------------------------------------------------------
    # Shared checks
    # ------------------------------------------------------------------

    def _expect_product(self, roots: Sequence[int], expected: Sequence[int], label: str) -> None:
        """Check ``prod (x - a)`` over ``roots`` coefficient by coefficient.

        ``expected`` is low degree first.

        Raises:
            VerificationFailed: On the first coefficient that differs.
        """
        actual = self._field.poly_from_roots(roots)
        if len(actual) != len(expected):
            raise VerificationFailed(f"{label}: degree {len(actual) - 1}, expected {len(expected) - 1}")
        for degree, (got, want) in enumerate(zip(actual, expected)):
            if got != want:
                raise VerificationFailed(f"{label}: coefficient of x^{degree} is {got}, expected {want}")

    def _binomial(self, degree: int, constant: int) -> list[int]:
        """Coefficients of ``x^degree - constant``, low first."""
        coeffs = [0] * (degree + 1)
        coeffs[0] = self._field.neg(constant)
        coeffs[degree] = self._field.add(coeffs[degree], 1)
        return coeffs

    def _finish(
        self,
        parts: Iterable[Sequence[int]],
        witness: Iterable[int],
        params: dict[str, int],
        indices: Sequence[int] | None = None,
    ) -> EvalSet:
        """Assemble the final set from its parts and verify it.

        Raises:
            CosetCollision: If two parts overlap.
            WitnessCheckFailed: If the set or witness does not sum to zero,
                or the witness is not half of the set.
            NonUniformCharacter: If ``eta(pi_S)`` is not constant.
        """
        field = self._field
        elements: list[int] = []
        positions: dict[int, int] = {}
        for part in parts:
            for a in part:
                if a in positions:
                    raise CosetCollision(f"point {a} lies in two parts of the {self.family} set")
                positions[a] = len(elements)
                elements.append(a)

        n = len(elements)
        require(n >= MIN_LENGTH and n % 2 == 0, f"length {n} must be even and at least {MIN_LENGTH}")
        if field.sum(elements) != 0:
            raise WitnessCheckFailed(f"{self.family} set does not sum to zero")

        witness = list(witness)
        if len(witness) != n // 2 or any(w not in positions for w in witness):
            raise WitnessCheckFailed(f"witness of size {len(witness)} is not half of the set (n={n})")
        if field.sum(witness) != 0:
            raise WitnessCheckFailed(f"{self.family} witness does not sum to zero")

        recipe = Recipe(
            family=self.family,
            params=params,
            indices=tuple(indices) if indices is not None else None,
        )
        eval_set = EvalSet.create(
            field,
            elements,
            witness=sorted(positions[w] for w in witness),
            recipe=recipe,
        )
        characters = {field.eta(pi_of(eval_set, i)) for i in range(n)}
        if len(characters) != 1:
            raise NonUniformCharacter(f"eta(pi_S) is not constant on the {self.family} set")
        logger.debug("Built %s set of length %d over F_%d", self.family, n, field.q)
        return eval_set
