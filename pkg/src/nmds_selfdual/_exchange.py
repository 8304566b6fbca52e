"""Writing and re-verifying code exchange documents."""

from __future__ import annotations

import json
import logging
from math import comb
from pathlib import Path

from pydantic import ValidationError

from nmds_selfdual._codes import (
    EvalSet,
    LinearCode,
    MultiplierVector,
    build_code,
    classify_by_ranks,
    is_self_dual,
    min_distance_bruteforce,
)
from nmds_selfdual._config import Budgets
from nmds_selfdual._exceptions import DocumentError, FieldError, NmdsError, VerificationFailed
from nmds_selfdual._field import GaloisField
from nmds_selfdual._linalg import Matrix
from nmds_selfdual.types._base import NmdsModel
from nmds_selfdual.types._classification import Classification
from nmds_selfdual.types._documents import CodeDocument, VerificationTranscript

logger = logging.getLogger("nmds_selfdual")

SKIPPED = "skipped"


def _rank_summary(code: LinearCode, classification: Classification) -> str:
    n, k = code.n, code.k
    if classification.verdict == "MDS":
        return f"all {classification.subsets_checked} of C({n},{k}) column {k}-subsets have rank {k}"
    if classification.verdict == "NMDS":
        return (
            f"all C({n},{k - 1})={comb(n, k - 1)} {k - 1}-subsets independent; "
            f"{classification.dependent_count} of C({n},{k})={comb(n, k)} {k}-subsets dependent; "
            f"all C({n},{k + 1})={comb(n, k + 1)} {k + 1}-subsets have rank {k}"
        )
    return f"{classification.violated}: columns {classification.evidence} have rank {classification.evidence_rank}"


def measure_distance(code: LinearCode, budgets: Budgets) -> int | None:
    """Minimum distance by enumeration, or ``None`` when over budget."""
    required = code.field.q**code.k
    if required > budgets.codeword_budget:
        logger.warning(
            "Skipping distance of [%d, %d] code: q^k=%d exceeds budget %d",
            code.n,
            code.k,
            required,
            budgets.codeword_budget,
        )
        return None
    return min_distance_bruteforce(code, budget=budgets.codeword_budget)


def make_document(code: LinearCode, classification: Classification, budgets: Budgets | None = None) -> CodeDocument:
    """Assemble the exchange document for a built code.

    The distance is enumerated when ``q**k`` fits the codeword budget and
    must agree with the rank verdict.

    Raises:
        VerificationFailed: If the code is not self-dual or the enumerated
            distance disagrees with the verdict.
    """
    budgets = budgets or Budgets()
    check = is_self_dual(code)
    if not check:
        raise VerificationFailed("G G^T is not zero")
    distance = measure_distance(code, budgets)
    if distance is not None and classification.d is not None and distance != classification.d:
        raise VerificationFailed(f"enumerated distance {distance}, rank verdict implies {classification.d}")

    transcript = VerificationTranscript(
        generator_rank=check.generator_rank,
        gram=check.gram,
        self_dual=check.holds,
        rank_scan=_rank_summary(code, classification),
        distance=f"enumerated d={distance}" if distance is not None else SKIPPED,
    )
    eval_set = code.eval_set
    return CodeDocument(
        field=code.field.spec,
        n=code.n,
        k=code.k,
        generator=code.generator,
        recipe=code.recipe,
        multipliers=code.multipliers.values if code.multipliers is not None else None,
        eval_set=eval_set.elements if eval_set is not None else None,
        witness=eval_set.witness if eval_set is not None else None,
        self_dual=check.holds,
        classification=classification,
        transcript=transcript,
    )


def load_document(path: str | Path) -> CodeDocument:
    """Read a document from disk.

    Raises:
        DocumentError: If the file is missing, not JSON, or not a document.
    """
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    try:
        return CodeDocument.model_validate(json.loads(raw))
    except (json.JSONDecodeError, ValidationError) as exc:
        raise DocumentError(f"{path} is not a code document: {exc}") from None


class CheckLine(NmdsModel):
    name: str
    passed: bool
    detail: str


class VerificationReport(NmdsModel):
    """Outcome of re-verifying a document; truthy when every check passed."""

    checks: tuple[CheckLine, ...]

    @property
    def passed(self) -> bool:
        return all(line.passed for line in self.checks)

    def __bool__(self) -> bool:
        return self.passed


def _open(document: CodeDocument, budgets: Budgets) -> GaloisField:
    spec = document.field
    try:
        field = GaloisField.from_order(spec.order, spec.modulus, table_threshold=budgets.table_threshold)
    except FieldError as exc:
        raise DocumentError(f"unusable field {spec}: {exc}") from None
    generator = document.generator
    if generator.rows != document.k or generator.cols != document.n:
        raise DocumentError(
            f"generator is {generator.rows}x{generator.cols}, document claims [{document.n}, {document.k}]"
        )
    return field


def verify_document(document: CodeDocument, budgets: Budgets | None = None) -> VerificationReport:
    """Re-check every claim a document makes.

    A generator entry outside the field fails the ``generator`` check and
    ends verification there, since no code can be formed from it.

    Raises:
        DocumentError: If the field or the generator shape is unusable.
    """
    budgets = budgets or Budgets()
    field = _open(document, budgets)
    lines: list[CheckLine] = []

    def record(name: str, passed: bool, detail: str) -> None:
        lines.append(CheckLine(name=name, passed=passed, detail=detail))

    generator = document.generator
    stray = next((i for i, v in enumerate(generator.entries) if not 0 <= v < field.q), None)
    if stray is not None:
        record("generator", False, f"entry {stray} = {generator.entries[stray]} is not an element of F_{field.q}")
        return VerificationReport(checks=tuple(lines))
    code = LinearCode.from_generator(Matrix.build(field, generator.rows, generator.cols, generator.entries))

    if document.eval_set is not None and document.multipliers is not None:
        try:
            eval_set = EvalSet.create(field, document.eval_set, witness=document.witness)
            rebuilt = build_code(eval_set, document.k, MultiplierVector.create(document.multipliers))
        except NmdsError as exc:
            record("generator", False, str(exc))
        else:
            same = rebuilt.generator.entries == code.generator.entries
            mismatch = next(
                (i for i, (a, b) in enumerate(zip(rebuilt.generator.entries, code.generator.entries)) if a != b),
                None,
            )
            record("generator", same, "matches eval_set and lambda" if same else f"entry {mismatch} differs")

    check = is_self_dual(code)
    if document.self_dual is not None:
        ok = check.holds == document.self_dual
        record("self-dual", ok, f"G G^T {'= 0' if check.holds else '!= 0'}, rank {check.generator_rank}")

    claimed = document.classification
    if claimed is not None:
        try:
            actual = classify_by_ranks(code, budget=budgets.subset_budget)
        except NmdsError as exc:
            record("classification", False, str(exc))
        else:
            ok = actual.verdict == claimed.verdict and actual.evidence == claimed.evidence
            record("classification", ok, f"{actual.verdict} (claimed {claimed.verdict})")
        if claimed.d is not None:
            distance = measure_distance(code, budgets)
            if distance is None:
                record("distance", True, SKIPPED)
            else:
                record("distance", distance == claimed.d, f"d={distance} (claimed {claimed.d})")

    report = VerificationReport(checks=tuple(lines))
    logger.debug("Verified document: %d checks, passed=%s", len(lines), report.passed)
    return report
