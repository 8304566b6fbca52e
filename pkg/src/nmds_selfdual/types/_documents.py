"""Code exchange documents and scan reports."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import Field, model_validator

from nmds_selfdual._linalg import Matrix
from nmds_selfdual.types._base import NmdsModel
from nmds_selfdual.types._classification import Classification
from nmds_selfdual.types._field import FieldSpec

Family = Literal["cyclic", "cosets", "mixed-cosets", "subspace", "trace"]
FAMILIES: tuple[str, ...] = ("cyclic", "cosets", "mixed-cosets", "subspace", "trace")

Theorem = Literal["3.3", "3.4", "3.5", "3.6", "3.7"]
# Published construction labels, in family order.
THEOREMS: dict[str, str] = dict(zip(("3.3", "3.4", "3.5", "3.6", "3.7"), FAMILIES))


class Recipe(NmdsModel):
    """How an evaluation set was built.

    A recipe may name its construction by ``family`` or by its published
    ``theorem`` label; the other one is filled in, and both are written to
    documents.

    Attributes:
        theorem: Construction label, ``"3.3"`` to ``"3.7"``.
        family: Construction family id.
        params: Named integer parameters (``q``, ``n``, ``r``, ``e``, ``f``,
            ``s``, ``t``, ``ell``, ``p``, ``m`` depending on the family).
        indices: Optional coset indices (``cosets`` family only).
        modulus: Optional defining polynomial override, low degree first.
    """

    theorem: Theorem
    family: Family
    params: dict[str, int]
    indices: tuple[int, ...] | None = None
    modulus: tuple[int, ...] | None = None

    @model_validator(mode="before")
    @classmethod
    def _fill_labels(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        theorem, family = data.get("theorem"), data.get("family")
        if family is None and theorem in THEOREMS:
            data["family"] = THEOREMS[theorem]
        elif theorem is None and family in FAMILIES:
            data["theorem"] = next(label for label, name in THEOREMS.items() if name == family)
        elif theorem in THEOREMS and family in FAMILIES and THEOREMS[theorem] != family:
            raise ValueError(f"theorem {theorem} is the {THEOREMS[theorem]} family, not {family}")
        return data


class VerificationTranscript(NmdsModel):
    """What was re-checked when a document was produced."""

    generator_rank: int
    gram: Matrix
    self_dual: bool
    rank_scan: str
    distance: str


class CodeDocument(NmdsModel):
    """The code exchange format.

    ``multipliers`` serialises under the key ``lambda``.
    """

    field: FieldSpec
    n: int
    k: int
    generator: Matrix
    recipe: Recipe | None = None
    multipliers: tuple[int, ...] | None = Field(default=None, alias="lambda")
    eval_set: tuple[int, ...] | None = None
    witness: tuple[int, ...] | None = None
    self_dual: bool | None = None
    classification: Classification | None = None
    transcript: VerificationTranscript | None = None

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True)


class FamilyLengths(NmdsModel):
    """Admissible lengths contributed by one construction family."""

    family: Family
    count: int
    lengths: tuple[int, ...]


class LengthScan(NmdsModel):
    """All achievable lengths for one field order.

    ``reference`` holds the published count for the orders where one is
    known, and ``discrepancy`` is ``union_count - reference``.
    """

    q: int
    max_length: int
    families: tuple[FamilyLengths, ...]
    union: tuple[int, ...]
    union_count: int
    ratio: float
    reference: int | None = None
    discrepancy: int | None = None
