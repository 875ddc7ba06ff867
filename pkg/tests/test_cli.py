"""Command line behaviour and its JSON serializations."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from weylorbit.cli import main

REPO = Path(__file__).resolve().parent.parent
G2_FILE = str(REPO / "certs" / "g2.certs.json")


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_roots_table(capsys):
    status, out, _ = run(capsys, "roots", "G2")
    assert status == 0
    assert "[3, 2]" in out
    assert out.count("\n") >= 7


def test_roots_json(capsys):
    status, out, _ = run(capsys, "roots", "B3", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert len(payload["positive_roots"]) == 9
    assert payload["highest_root"] == [1, 2, 2]


def test_pi_json_g2(capsys):
    status, out, _ = run(capsys, "pi", "G2", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert len(payload) == 4
    assert [1] in [p["pi"] for p in payload]
    assert [2] in [p["pi"] for p in payload]


def test_dim_example(capsys):
    status, out, _ = run(capsys, "dim", "A3", "--pi", "2", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert payload["length"] == 5
    assert payload["rank"] == 1
    assert payload["dimension"] == 6


def test_dim_rejects_inadmissible(capsys):
    status, _, err = run(capsys, "dim", "A3", "--pi", "1")
    assert status == 1
    assert "admissible" in err


def test_weyl_subcommand(capsys):
    status, out, _ = run(capsys, "weyl", "A2", "--word", "1,2,1", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert payload["length"] == 3
    assert payload["involution"] is True


def test_step_subcommand(capsys):
    status, out, _ = run(capsys, "step", "A2", "--word", "", "--s", "1", "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert payload["case"] == 2
    assert sorted(payload["candidates"]) == [[], [1]]


def test_verify_ok(capsys):
    status, out, _ = run(capsys, "verify", G2_FILE)
    assert status == 0
    assert "2 passed, 0 failed" in out


def test_verify_json_round_trip(capsys):
    status, out, _ = run(capsys, "verify", G2_FILE, "--format", "json")
    payload = json.loads(out)
    assert status == 0
    assert payload["passed"] == 2 and payload["failed"] == 0
    assert all(r["pass"] for r in payload["reports"])


def test_verify_failure_exit_code(tmp_path, capsys):
    bad = [{"type": "G2", "pi": [2], "gamma": [1, 0], "sigma": [2], "label": "bad"}]
    path = tmp_path / "bad.certs.json"
    path.write_text(json.dumps(bad))
    status, out, _ = run(capsys, "verify", str(path))
    assert status == 1
    assert "1 failed" in out
    assert "FAIL bad" in out


def test_verify_mutation_flag(capsys):
    status, out, _ = run(capsys, "verify", G2_FILE, "--mutate", "10", "--seed", "3")
    assert status == 0
    assert "mutations:" in out


def test_verify_missing_file(capsys):
    status, _, err = run(capsys, "verify", "no-such-file.json")
    assert status == 1
    assert "error" in err


def test_bad_flags_exit_nonzero():
    with pytest.raises(SystemExit) as exc:
        main(["roots"])  # missing the type argument
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["pi", "G2", "--format", "yaml"])


def test_tables_tsv(capsys):
    status, out, _ = run(capsys, "tables", "--max-rank", "3", "--format", "tsv")
    assert status == 0
    lines = out.strip().splitlines()
    assert lines[0].split("\t") == ["type", "pi", "length", "rank", "dimension", "central"]
    assert any(line.startswith("B3\t") for line in lines)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weylorbit.cli", "pi", "G2"],
        capture_output=True,
        text=True,
        cwd=REPO,
    )
    assert proc.returncode == 0
    assert "dimension" in proc.stdout
