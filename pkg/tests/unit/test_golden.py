"""Unit tests for golden documents and their verification."""

import json

import pytest

from clifford_rqm.exceptions import ConfigurationError, DomainError, GoldenFormatError, ShapeMismatchError
from clifford_rqm.representations import RepForm, RepKind
from clifford_rqm.shell.golden import dump_rep, load_golden, parse_golden
from clifford_rqm.shell.verify import (
    computed_rep,
    resolve_golden_paths,
    verify_against_golden,
    verify_golden_file,
)
from clifford_rqm.utils.config import TABLE_DIR
from tests.fixtures import golden_path

APPENDICES = sorted(path.name for path in TABLE_DIR.glob("*.golden"))

MINIMAL = """\
algebra c3
kind direct
form quaternion
order 32 13 21 0 1 2 3 123
matrix 0 prefactor +1
+1 .
. +1
"""


@pytest.mark.tier_a
class TestParseGolden:
    def test_header(self):
        golden = load_golden(golden_path("c3_conjugate_complex.golden"))
        assert golden.algebra == "c3"
        assert golden.kind is RepKind.CONJUGATE
        assert golden.form is RepForm.COMPLEX
        assert golden.size == 4
        assert golden.unit_algebra.name == "complex"

    def test_minimal_document(self):
        golden = parse_golden(MINIMAL)
        assert list(golden.matrices) == ["0"]
        assert golden.matrices["0"].algebra.name == "quaternion"

    def test_missing_header(self):
        with pytest.raises(GoldenFormatError, match="'order'"):
            parse_golden("algebra c3\nkind direct\nform real\n")

    def test_unknown_kind(self):
        with pytest.raises(GoldenFormatError) as exc_info:
            parse_golden(MINIMAL.replace("kind direct", "kind sideways"))
        assert exc_info.value.line_number == 2

    def test_short_row(self):
        with pytest.raises(GoldenFormatError) as exc_info:
            parse_golden(MINIMAL.replace(". +1\n", ".\n"))
        assert exc_info.value.line_number == 7

    def test_truncated_matrix(self):
        with pytest.raises(GoldenFormatError, match="ends after 1 of 2 rows"):
            parse_golden(MINIMAL.replace(". +1\n", ""))

    def test_duplicate_matrix(self):
        with pytest.raises(GoldenFormatError, match="appears twice"):
            parse_golden(MINIMAL + "matrix 0 prefactor +1\n+1 .\n. +1\n")

    def test_bad_token(self):
        with pytest.raises(GoldenFormatError):
            parse_golden(MINIMAL.replace("+1 .", "1 ."))

    def test_zero_prefactor(self):
        with pytest.raises(GoldenFormatError, match="cannot be zero"):
            parse_golden(MINIMAL.replace("prefactor +1", "prefactor ."))

    def test_unit_outside_algebra(self):
        with pytest.raises(GoldenFormatError, match="matrix 0"):
            parse_golden(MINIMAL.replace("+1 .", "+s1 ."))

    def test_uneven_order(self):
        with pytest.raises(GoldenFormatError, match="groups"):
            parse_golden(MINIMAL.replace("order 32 13 21 0 1 2 3 123", "order 32 13 21"))


@pytest.mark.tier_a
class TestDumpRep:
    def test_dump_parses_back(self):
        rep = computed_rep("c4", RepKind.CONJUGATE, RepForm.QUATERNION)
        assert verify_against_golden(rep, parse_golden(dump_rep(rep))).is_empty

    def test_alias_survives(self, tmp_path):
        rep = computed_rep("c4", RepKind.DIRECT, RepForm.COMPLEX, basic="13")
        text = dump_rep(rep)
        assert "units i=j" in text
        path = tmp_path / "second_generation.golden"
        path.write_text(text, encoding="utf-8")
        assert parse_golden(text).alias == {"i": "j"}
        assert verify_golden_file(path).is_empty

    def test_json(self):
        document = json.loads(dump_rep(computed_rep("c3", RepKind.DIRECT, RepForm.COMPLEX), "json"))
        assert document["unit_algebra"] == "complex"
        assert document["matrices"]["3"]["prefactor"] == "+i"
        assert len(document["matrices"]) == 8

    def test_unknown_format(self):
        with pytest.raises(DomainError):
            dump_rep(computed_rep("c3", RepKind.DIRECT, RepForm.REAL), "yaml")


@pytest.mark.tier_a
class TestVerify:
    @pytest.mark.parametrize("name", APPENDICES)
    def test_packaged_tables_match(self, name):
        report = verify_golden_file(golden_path(name))
        assert report.errata == []

    def test_all_twelve_tables_present(self):
        assert len(APPENDICES) == 12

    def test_prefactor_difference_is_a_note(self):
        report = verify_golden_file(golden_path("c4_conjugate_quaternion.golden"))
        assert "134" in [note.label for note in report.notes]

    def test_corrupted_cell(self, tmp_path):
        text = golden_path("c3_direct_real.golden").read_text(encoding="utf-8")
        corrupted = tmp_path / "c3_direct_real.golden"
        broken = text.replace("matrix 0 prefactor +1\n+1", "matrix 0 prefactor +1\n-1", 1)
        corrupted.write_text(broken, encoding="utf-8")
        report = verify_golden_file(corrupted)
        assert len(report) == 1
        erratum = report.errata[0]
        assert (erratum.label, erratum.row, erratum.col) == ("0", "32", "32")
        assert (erratum.fixture, erratum.computed) == ("-1", "+1")
        assert report.labels == ["0"]

    def test_header_mismatch(self):
        golden = load_golden(golden_path("c3_direct_real.golden"))
        with pytest.raises(ShapeMismatchError) as exc_info:
            verify_against_golden(computed_rep("c4", RepKind.DIRECT, RepForm.REAL), golden)
        assert exc_info.value.field_name == "algebra"

    def test_kind_mismatch(self):
        golden = load_golden(golden_path("c3_direct_real.golden"))
        with pytest.raises(ShapeMismatchError, match="kind"):
            verify_against_golden(computed_rep("c3", RepKind.CONJUGATE, RepForm.REAL), golden)


@pytest.mark.tier_a
class TestResolveGoldenPaths:
    def test_stem_expands_to_all_forms(self):
        paths = resolve_golden_paths("c3_direct.golden", TABLE_DIR)
        assert [p.name for p in paths] == [
            "c3_direct_complex.golden",
            "c3_direct_quaternion.golden",
            "c3_direct_real.golden",
        ]

    def test_packaged_name(self):
        assert resolve_golden_paths("c4_conjugate_real.golden", TABLE_DIR) == [TABLE_DIR / "c4_conjugate_real.golden"]

    def test_existing_path(self, tmp_path):
        path = tmp_path / "custom.golden"
        path.write_text(MINIMAL, encoding="utf-8")
        assert resolve_golden_paths(path, TABLE_DIR) == [path]

    def test_nothing_matches(self):
        with pytest.raises(ConfigurationError):
            resolve_golden_paths("a9.golden", TABLE_DIR)
