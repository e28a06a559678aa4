"""Exit codes, output schemas, and byte-level determinism of the CLI."""

import io
import json
from contextlib import redirect_stdout

import pytest

from so2m.cli import run


def capture(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def test_verify_suite_passes():
    code, out = capture(["verify", "--m", "5", "--suite", "chevalley"])
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out


def test_verify_all_small():
    code, out = capture(["verify", "--m", "3", "--suite", "all"])
    assert code == 0, out


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        capture(["tables", "--m", "7", "--table", "99"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        capture(["tables", "--m", "1", "--table", "3"])
    assert exc.value.code == 2
    # family mismatch: table 4 is the odd-m table
    with pytest.raises(SystemExit) as exc:
        capture(["tables", "--m", "4", "--table", "4"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        capture(["tables", "--m", "5", "--table", "5"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        capture(["nonsense"])


def test_json_schema():
    code, out = capture(["tables", "--m", "5", "--table", "3", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["m"] == 5 and payload["family"] == "B"
    assert [row["involution"] for row in payload["rows"]] == ["sigma_2", "sigma_3"]
    assert payload["rows"][0]["d_sigma"] == 4
    assert payload["rows"][0]["d_sigma_theta"] == 6


def test_table5_rows_sorted_and_complete():
    code, out = capture(["tables", "--m", "4", "--table", "5", "--format", "json"])
    payload = json.loads(out)
    assert len(payload["rows"]) == 18
    trivial = [r for r in payload["rows"] if r["label"] == "trivial"][0]
    assert trivial["no_component"] == []
    assert trivial["polynomial"][0] == [0, 0, 1]


def test_involutions_serialization():
    code, out = capture(["involutions", "--m", "2", "--format", "json"])
    payload = json.loads(out)
    names = [row["name"] for row in payload["rows"]]
    assert names == ["sigma_1", "eta_1", "eta_2", "mu_1", "tau'_1", "tau_1"]
    conj = payload["rows"][0]["conjugator"]
    assert len(conj) == 4 and len(conj[0]) == 4
    assert all(len(cell) == 2 for row in conj for cell in row)


def test_determinism_byte_identical():
    commands = [
        ["tables", "--m", "5", "--table", "4"],
        ["tables", "--m", "4", "--table", "5"],
        ["tables", "--m", "4", "--table", "2"],
        ["tables", "--m", "5", "--table", "3"],
        ["involutions", "--m", "4"],
        ["orientation", "--m", "4"],
        ["aq", "--m", "5"],
        ["cycles", "--m", "4"],
        ["automorphic", "--m", "5"],
    ]
    for argv in commands:
        for fmt in ("json", "csv", "text"):
            first = capture(argv + ["--format", fmt])
            second = capture(argv + ["--format", fmt])
            assert first == second, argv


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    code, out = capture(["tables", "--m", "2", "--table", "5", "--output", str(target)])
    assert code == 0 and out == ""
    payload = json.loads(target.read_text())
    assert payload["family"] == "D" and len(payload["rows"]) == 9


def test_format_environment_default(monkeypatch):
    monkeypatch.setenv("SO2M_FORMAT", "text")
    code, out = capture(["tables", "--m", "5", "--table", "3"])
    assert code == 0
    assert out.splitlines()[0].startswith("involution")


def test_verify_failure_exit_code(monkeypatch):
    import so2m.verify as verify_mod

    def broken_suite(m):
        return [verify_mod.CheckResult("forced failure", False, "injected")]

    monkeypatch.setitem(verify_mod.SUITES, "chevalley", broken_suite)
    code, out = capture(["verify", "--m", "3", "--suite", "chevalley"])
    assert code == 1
    assert "[FAIL] forced failure" in out
