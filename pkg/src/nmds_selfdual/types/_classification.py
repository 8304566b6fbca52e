"""Classification verdict records."""

from __future__ import annotations

from typing import Literal

from pydantic import Field

from nmds_selfdual.types._base import NmdsModel

Verdict = Literal["MDS", "NMDS", "OTHER"]


class Classification(NmdsModel):
    """MDS / NMDS / OTHER verdict with re-checkable evidence.

    * ``MDS``: ``evidence`` is empty; ``subsets_checked`` counts the
      k-column submatrices found to have full rank.
    * ``NMDS``: ``evidence`` is the lexicographically first dependent
      k-column subset and ``evidence_rank`` its rank (< k).
    * ``OTHER``: ``violated`` names the failed condition and ``evidence``
      is a column subset whose rank (``evidence_rank``) proves it.

    ``dependent_subsets`` lists every dependent k-subset found by the rank
    scan. It is kept in memory only and never serialised.
    """

    verdict: Verdict
    d: int | None = None
    dual_d: int | None = None
    evidence: tuple[int, ...] | None = None
    evidence_rank: int | None = None
    violated: str | None = None
    dependent_count: int = 0
    subsets_checked: int = 0
    dependent_subsets: tuple[tuple[int, ...], ...] = Field(default=(), exclude=True)
