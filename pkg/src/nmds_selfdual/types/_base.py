"""Base models for all nmds-selfdual records."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, PrivateAttr


class NmdsModel(BaseModel):
    """Base Pydantic model for every serialisable record.

    Records are frozen so they can be shared freely, and field order is the
    declaration order, which keeps JSON documents byte-stable across runs.
    """

    model_config = ConfigDict(
        populate_by_name=True,
        frozen=True,
    )


class FieldBoundModel(NmdsModel):
    """A record whose entries are elements of one finite field.

    The field is held as a private attribute: it is not serialised and is
    attached by the owning module's constructors.
    """

    _field: Any = PrivateAttr(default=None)

    @property
    def field(self) -> Any:
        """The :class:`~nmds_selfdual.GaloisField` the entries live in."""
        if self._field is None:
            raise ValueError(f"{type(self).__name__} has no field attached")
        return self._field

    def _bind(self, field: Any) -> Any:
        self._field = field
        return self
