"""Work budgets for the exhaustive checks, with environment overrides."""

from __future__ import annotations

import os
from collections.abc import Mapping

from pydantic import Field

from nmds_selfdual._exceptions import InvalidParams
from nmds_selfdual.types._base import NmdsModel

_ENV_PREFIX = "NMDS_"


class Budgets(NmdsModel):
    """Limits on the exhaustive computations.

    Args:
        codeword_budget: Maximum ``q**k`` for minimum-distance enumeration.
        subset_budget: Maximum number of column subsets of one size the
            rank classifier may examine.
        search_budget: Maximum number of subsets the zero-sum search may
            enumerate.
        table_threshold: Largest field order for which log/exp tables are
            built.
    """

    codeword_budget: int = Field(default=10**7, ge=1)
    subset_budget: int = Field(default=10**6, ge=1)
    search_budget: int = Field(default=10**7, ge=1)
    table_threshold: int = Field(default=2**20, ge=1)

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Budgets:
        """Build budgets from ``NMDS_*`` environment variables.

        ``NMDS_CODEWORD_BUDGET``, ``NMDS_SUBSET_BUDGET``,
        ``NMDS_SEARCH_BUDGET`` and ``NMDS_TABLE_THRESHOLD`` override the
        defaults when set.

        Raises:
            InvalidParams: If a variable is not a positive decimal integer.
        """
        environ = os.environ if environ is None else environ
        overrides: dict[str, int] = {}
        for name in cls.model_fields:
            raw = environ.get(_ENV_PREFIX + name.upper())
            if raw is None or raw.strip() == "":
                continue
            try:
                value = int(raw.strip(), 10)
            except ValueError:
                raise InvalidParams(
                    f"{_ENV_PREFIX + name.upper()} must be a decimal integer, got {raw!r}"
                ) from None
            if value < 1:
                raise InvalidParams(f"{_ENV_PREFIX + name.upper()} must be positive, got {value}")
            overrides[name] = value
        return cls(**overrides)
