import io
import json
import shutil
import subprocess
import sys

import pytest

from charring.cli import SCAN_COLUMNS, cmd_compare, cmd_scan, compare_tables, main
from charring.fixtures import FIXTURE_DIR, fixture_path

from conftest import ALL_FIXTURES, table


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


class TestValidate:
    def test_ok(self):
        code, text = run("validate", fixture_path("S3"))
        assert code == 0 and "ok" in text

    def test_invalid(self, tmp_path):
        doc = json.loads(fixture_path("S3").read_text())
        doc["irreducibles"][2][0] = 3
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(doc))
        code, text = run("validate", bad)
        assert code == 2
        assert "Σ degrees² = 11 ≠ 6" in text

    def test_unreadable(self, tmp_path):
        code, _ = run("validate", tmp_path / "missing.json")
        assert code == 2


def test_sections_output():
    code, text = run("sections", fixture_path("S3"), "-p", 2)
    assert code == 0
    assert text.splitlines() == ["0 1 0 1", "2 3 2"]


def test_blocks_output():
    code, text = run("blocks", fixture_path("S3"), "-p", 3)
    assert code == 0
    assert text.splitlines() == [
        "sections {0} dim 2 idempotent 2 2 0",
        "sections {1} dim 1 idempotent 2 1 0",
    ]


def test_blocks_dump_constants():
    code, text = run("blocks", fixture_path("S3"), "-p", 2, "--dump-constants")
    lines = text.splitlines()
    assert lines[0] == "# dimension 3"
    assert "2 2 2 1" in lines and "1 1 0 1" in lines


class TestLoewyCommand:
    def test_principal_json(self):
        code, text = run("loewy", fixture_path("C5"), "-p", 5, "--principal", "--json")
        doc = json.loads(text)
        assert code == 0
        assert doc["blocks"] == [{"block": "{0}", "radical_dims": [5, 4, 3, 2, 1, 0], "loewy_length": 5}]

    def test_oracle(self):
        code, text = run("loewy", fixture_path("S3"), "-p", 3, "--oracle")
        assert code == 0 and "oracle: agrees" in text

    def test_oracle_over_cap(self):
        code, _ = run("loewy", fixture_path("n768"), "-p", 2, "--oracle")
        assert code == 2

    def test_not_prime(self):
        code, _ = run("loewy", fixture_path("S3"), "-p", 4)
        assert code == 2


class TestCompare:
    def test_s3_c2(self):
        r = cmd_compare(fixture_path("S3"), fixture_path("C2"), 2)
        assert (r.ll_group, r.ll_normalizer, r.equal) == (2, 2, True)

    def test_a4_c3(self):
        r = cmd_compare(fixture_path("A4"), fixture_path("C3"), 3)
        assert (r.ll_group, r.ll_normalizer, r.equal) == (3, 3, True)

    def test_json(self):
        code, text = run("compare", fixture_path("S3"), fixture_path("C2"), "-p", 2, "--json")
        doc = json.loads(text)
        assert code == 0
        assert doc["ll_group"] == doc["ll_normalizer"] == 2 and doc["equal"] is True

    def test_prime_not_dividing_group(self):
        code, _ = run("compare", fixture_path("C3"), fixture_path("C3"), "-p", 2)
        assert code == 2

    def test_warns_on_normalizer_order(self, capsys):
        code, _ = run("compare", fixture_path("S3"), fixture_path("C3"), "-p", 2)
        assert code == 0
        assert "warning" in capsys.readouterr().err

    @pytest.mark.parametrize("name", ALL_FIXTURES)
    def test_self_comparison(self, name):
        t = table(name)
        for p in t.primes:
            r = compare_tables(t, t, p)
            assert r.equal and r.ll_group >= 1


class TestScan:
    def test_fixture_row(self):
        rows, errors = cmd_scan(FIXTURE_DIR, 2)
        assert not errors
        s3 = next(r for r in rows if r["name"] == "S3")
        assert [s3[c] for c in SCAN_COLUMNS] == ["S3", 6, 2, 3, 2, 2, 2, 2]

    def test_csv_layout(self):
        code, text = run("scan", FIXTURE_DIR, "-p", 2)
        assert code == 0
        lines = text.split("\n")
        assert lines[0] == ",".join(SCAN_COLUMNS)
        assert "S3,6,2,3,2,2,2,2" in lines
        assert "\r" not in text and text.endswith("\n")

    def test_deterministic_across_runs_and_threads(self):
        _, a = run("scan", FIXTURE_DIR, "--all-primes")
        _, b = run("scan", FIXTURE_DIR, "--all-primes", "--jobs", 4)
        _, c = run("scan", FIXTURE_DIR, "--all-primes")
        assert a == b == c

    def test_rows_sorted_by_file_then_prime(self):
        rows, _ = cmd_scan(FIXTURE_DIR)
        names = [r["name"] for r in rows]
        assert names == sorted(names, key=lambda n: fixture_path(n).name)
        for r in rows:
            assert r["blocks"] <= r["p_regular"]
            assert r["principal_loewy_length"] <= r["principal_dim"]

    def test_empty_dir(self, tmp_path):
        code, text = run("scan", tmp_path, "-p", 2)
        assert code == 0
        assert text == ",".join(SCAN_COLUMNS) + "\n"

    def test_corrupted_file(self, tmp_path, capsys):
        shutil.copy(fixture_path("S3"), tmp_path / "S3.json")
        (tmp_path / "broken.json").write_text('{"name": "x", "order": ')
        code, text = run("scan", tmp_path, "-p", 2)
        assert code == 1
        assert "broken.json" in capsys.readouterr().err
        assert text.splitlines() == [",".join(SCAN_COLUMNS), "S3,6,2,3,2,2,2,2"]

    def test_json_and_output_file(self, tmp_path):
        out = tmp_path / "scan.json"
        code, text = run("scan", FIXTURE_DIR, "-p", 3, "--format", "json", "-o", out)
        assert code == 0 and text == ""
        rows = json.loads(out.read_text())
        assert {r["name"] for r in rows} == set(ALL_FIXTURES)

    def test_missing_dir(self, tmp_path):
        code, _ = run("scan", tmp_path / "nope")
        assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "charring", "compare", str(fixture_path("S3")), str(fixture_path("C2")), "-p", "2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "equal" in proc.stdout


def test_internal_error_exit_code(monkeypatch):
    from charring import cli
    from charring.errors import InvariantViolation

    def broken(*args, **kwargs):
        raise InvariantViolation("non-idempotent idempotent")

    monkeypatch.setattr(cli, "principal_block", broken)
    code, _ = run("compare", fixture_path("S3"), fixture_path("C2"), "-p", 2)
    assert code == 3
