"""Command-line interface, exercised through real subprocesses."""

import json
import pathlib
import subprocess
import sys

GOLDEN_MD = pathlib.Path(__file__).parent / "data" / "classification_table.md"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "o2endo.cli", *args],
        capture_output=True,
        text=True,
    )


class TestClassify:
    def test_markdown_row(self):
        r = run_cli("classify", "--perm", "(13)")
        assert r.returncode == 0
        assert "| ρ_13 | s_{21,1}+s_{12,2} | s_{11,1}+s_{22,2} | irr | log 2 | log 2 | 2 |" in r.stdout

    def test_csv_row(self):
        r = run_cli("classify", "--perm", "(1324)", "--format", "csv")
        assert r.returncode == 0
        assert r.stdout.splitlines()[1] == (
            'ρ_1324 (≃ ρ_12),s_{2},"s_{12,1}+s_{11,2}",irr,log 2,0,2'
        )

    def test_json_carries_certificates(self):
        r = run_cli("classify", "--perm", "(23)", "--format", "json")
        payload = json.loads(r.stdout)
        cert = payload["certificates"][0]
        assert cert["property"] == "red"
        assert cert["commutant"]["dims"] == [4, 4, 4]

    def test_out_file(self, tmp_path):
        target = tmp_path / "row.csv"
        r = run_cli("classify", "--perm", "id", "--format", "csv", "--out", str(target))
        assert r.returncode == 0
        assert target.read_text().splitlines()[1].startswith("ρ_id = id,")

    def test_bad_perm_is_usage_error(self):
        r = run_cli("classify", "--perm", "(15)")
        assert r.returncode == 64
        assert r.stdout == ""

    def test_rank3_perm_is_usage_error(self):
        r = run_cli("classify", "--perm", "(58)")
        assert r.returncode == 64


class TestTable:
    def test_matches_golden(self):
        r = run_cli("table")
        assert r.returncode == 0
        assert r.stdout == GOLDEN_MD.read_text()

    def test_parallel_matches_serial(self):
        serial = run_cli("table", "--format", "json")
        parallel = run_cli("table", "--format", "json", "--jobs", "2")
        assert serial.returncode == parallel.returncode == 0
        assert serial.stdout == parallel.stdout

    def test_out_file(self, tmp_path):
        target = tmp_path / "table.md"
        r = run_cli("table", "--out", str(target))
        assert r.returncode == 0
        assert target.read_text() == GOLDEN_MD.read_text()


class TestXi:
    def test_report(self):
        r = run_cli("xi", "--perm", "(13)", "--show-basis")
        assert r.returncode == 0
        assert "chain dims: 4 2 2" in r.stdout
        assert "index: 2" in r.stdout
        assert "  s_{1,1}" in r.stdout
        assert "  s_{2,2}" in r.stdout

    def test_automorphism_row(self):
        r = run_cli("xi", "--perm", "(12)(34)")
        assert r.returncode == 0
        assert "chain dims: 4 1 1" in r.stdout
        assert "index: 1" in r.stdout


class TestVerifyPaper:
    def test_all_ok(self):
        r = run_cli("verify-paper")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert len(lines) == 8
        assert all(line.startswith("ok   rho_") for line in lines[:7])
        assert "rho_134 = rho_142 . rho_(13)(24)  [index 4 = 4]" in r.stdout
        assert lines[-1] == "all identities hold"


class TestSweep:
    def test_rank2_tally(self):
        r = run_cli("sweep", "--rank", "2")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert lines[0] == "one_line,cycles,property"
        assert len(lines) == 25
        rows = [line.split(",") for line in lines[1:]]
        tally = {}
        for _, _, prop in rows:
            tally[prop] = tally.get(prop, 0) + 1
        assert tally == {
            "automorphism": 4,
            "reducible-witness-found": 10,
            "unknown": 10,
        }

    def test_rank2_rows_in_lex_order(self):
        r = run_cli("sweep", "--rank", "2")
        one_lines = [line.split(",")[0] for line in r.stdout.splitlines()[1:]]
        assert one_lines == sorted(one_lines)
        assert one_lines[0] == "1234"

    def test_limit(self):
        r = run_cli("sweep", "--rank", "3", "--limit", "5")
        assert r.returncode == 0
        lines = r.stdout.splitlines()
        assert len(lines) == 6
        assert lines[1] == "12345678,id,automorphism"


class TestUsageErrors:
    def test_unknown_subcommand(self):
        assert run_cli("frobnicate").returncode == 64

    def test_missing_required_flag(self):
        assert run_cli("classify").returncode == 64

    def test_bad_format(self):
        assert run_cli("table", "--format", "html").returncode == 64

    def test_bad_sweep_rank(self):
        assert run_cli("sweep", "--rank", "4").returncode == 64

    def test_no_subcommand(self):
        assert run_cli().returncode == 64
