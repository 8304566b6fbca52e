"""Tests for writing, loading and re-verifying code documents."""

import json
from pathlib import Path

import pytest

from nmds_selfdual._config import Budgets
from nmds_selfdual._exceptions import DocumentError
from nmds_selfdual._exchange import SKIPPED, load_document, make_document, verify_document
from nmds_selfdual._field import GaloisField
from nmds_selfdual._multipliers import pipeline
from nmds_selfdual.constructions import build_mixed_cosets
from nmds_selfdual.types import CodeDocument


def _f9_document(budgets: Budgets | None = None) -> CodeDocument:
    code, classification = pipeline(build_mixed_cosets(GaloisField.from_order(9), 1, 1))
    return make_document(code, classification, budgets)


def _payload(document: CodeDocument) -> dict:
    return json.loads(document.to_json())


# ---------------------------------------------------------------------------
# make_document
# ---------------------------------------------------------------------------


class TestMakeDocument:
    """Tests for document assembly."""

    def test_fields(self) -> None:
        """The F_9 document records the set, witness, lambda and verdict."""
        document = _f9_document()
        assert (document.n, document.k) == (6, 3)
        assert document.eval_set == (6, 3, 4, 7, 8, 5)
        assert document.witness == (1, 2, 5)
        assert document.self_dual is True
        assert document.classification.verdict == "NMDS"
        assert document.classification.d == 3
        assert document.recipe.family == "mixed-cosets"
        assert len(document.multipliers) == 6

    def test_transcript(self) -> None:
        """The transcript records the Gram matrix and the enumerated distance."""
        transcript = _f9_document().transcript
        assert transcript.generator_rank == 3
        assert not any(transcript.gram.entries)
        assert transcript.distance == "enumerated d=3"
        assert "C(6,3)" in transcript.rank_scan

    def test_distance_skipped_over_budget(self) -> None:
        """A tiny codeword budget skips enumeration."""
        document = _f9_document(Budgets(codeword_budget=10))
        assert document.transcript.distance == SKIPPED

    def test_deterministic(self) -> None:
        """Two builds serialise byte-identically."""
        assert _f9_document().to_json() == _f9_document().to_json()


# ---------------------------------------------------------------------------
# load_document
# ---------------------------------------------------------------------------


class TestLoadDocument:
    """Tests for reading documents from disk."""

    def test_round_trip(self, tmp_path: Path) -> None:
        """A written document loads back with the same content."""
        document = _f9_document()
        path = tmp_path / "code.json"
        path.write_text(document.to_json(), encoding="utf-8")
        loaded = load_document(path)
        assert loaded.generator.entries == document.generator.entries
        assert loaded.multipliers == document.multipliers

    def test_missing_file(self, tmp_path: Path) -> None:
        """A missing file is a document error."""
        with pytest.raises(DocumentError, match="cannot read"):
            load_document(tmp_path / "absent.json")

    def test_not_json(self, tmp_path: Path) -> None:
        """Garbage is a document error."""
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(DocumentError):
            load_document(path)

    def test_missing_keys(self, tmp_path: Path) -> None:
        """JSON without the required keys is a document error."""
        path = tmp_path / "empty.json"
        path.write_text("{}", encoding="utf-8")
        with pytest.raises(DocumentError, match="not a code document"):
            load_document(path)


# ---------------------------------------------------------------------------
# verify_document
# ---------------------------------------------------------------------------


class TestVerifyDocument:
    """Tests for re-verification."""

    def test_clean_document_passes(self) -> None:
        """Every check passes on a freshly built document."""
        report = verify_document(_f9_document())
        assert report
        assert [line.name for line in report.checks] == ["generator", "self-dual", "classification", "distance"]

    def test_every_single_entry_mutation_fails(self) -> None:
        """Changing any one generator entry is detected."""
        document = _f9_document()
        payload = _payload(document)
        for position, value in enumerate(payload["generator"]["entries"]):
            mutated = json.loads(json.dumps(payload))
            mutated["generator"]["entries"][position] = (value + 1) % 9
            report = verify_document(CodeDocument.model_validate(mutated))
            assert not report.passed, f"mutation at entry {position} went unnoticed"

    def test_wrong_verdict_claim(self) -> None:
        """A false classification claim fails the classification check."""
        payload = _payload(_f9_document())
        payload["classification"]["verdict"] = "MDS"
        report = verify_document(CodeDocument.model_validate(payload))
        failed = [line.name for line in report.checks if not line.passed]
        assert failed == ["classification"]

    def test_distance_skipped(self) -> None:
        """Over the codeword budget the distance check is skipped, not failed."""
        report = verify_document(_f9_document(), Budgets(codeword_budget=10))
        distance = next(line for line in report.checks if line.name == "distance")
        assert distance.passed
        assert distance.detail == SKIPPED

    def test_shape_mismatch(self) -> None:
        """A generator that disagrees with n and k is unusable."""
        payload = _payload(_f9_document())
        payload["k"] = 2
        with pytest.raises(DocumentError):
            verify_document(CodeDocument.model_validate(payload))

    def test_entry_outside_field(self) -> None:
        """An entry outside the declared field fails the generator check alone."""
        payload = _payload(_f9_document())
        payload["generator"]["entries"][0] = 9
        report = verify_document(CodeDocument.model_validate(payload))
        assert not report.passed
        assert [line.name for line in report.checks] == ["generator"]
        assert "not an element of F_9" in report.checks[0].detail

    def test_negative_entry(self) -> None:
        """Negative encodings are not field elements either."""
        payload = _payload(_f9_document())
        payload["generator"]["entries"][3] = -1
        report = verify_document(CodeDocument.model_validate(payload))
        assert not report.passed
