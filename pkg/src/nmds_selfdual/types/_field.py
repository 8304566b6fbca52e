"""Finite field description record."""

from __future__ import annotations

from pydantic import Field

from nmds_selfdual.types._base import NmdsModel


class FieldSpec(NmdsModel):
    """A finite field F_{p^m} given by its defining polynomial.

    ``modulus`` lists the ``m + 1`` coefficients low degree first, so
    ``x^2 - x - 1`` over F_3 is ``(2, 2, 1)``. The record itself only checks
    shapes; irreducibility is verified when a
    :class:`~nmds_selfdual.GaloisField` is built from it.
    """

    p: int = Field(ge=2)
    m: int = Field(ge=1)
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        """The number of field elements ``p**m``."""
        return self.p**self.m
