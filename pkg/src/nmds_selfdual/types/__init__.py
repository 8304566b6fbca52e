"""Public record types for nmds-selfdual."""

from nmds_selfdual.types._base import FieldBoundModel, NmdsModel
from nmds_selfdual.types._field import FieldSpec
from nmds_selfdual.types._classification import Classification, Verdict
from nmds_selfdual.types._documents import (
    FAMILIES,
    THEOREMS,
    CodeDocument,
    Family,
    FamilyLengths,
    LengthScan,
    Recipe,
    Theorem,
    VerificationTranscript,
)

__all__ = [
    "FAMILIES",
    "THEOREMS",
    "Classification",
    "CodeDocument",
    "Family",
    "FamilyLengths",
    "FieldBoundModel",
    "FieldSpec",
    "LengthScan",
    "NmdsModel",
    "Recipe",
    "Theorem",
    "Verdict",
    "VerificationTranscript",
]
