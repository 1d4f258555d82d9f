import json
import subprocess
import sys

import pytest

from vecpack import cli
from vecpack.packdisks import InvariantViolation

TRACE = "s,l\n0.6,0.2\n0.2,0.6\n0.6,0.2\n0.2,0.6\n"


@pytest.fixture
def trace_csv(tmp_path):
    p = tmp_path / "trace.csv"
    p.write_text(TRACE)
    return str(p)


def run(argv, capsys):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_gen_empty(tmp_path, capsys):
    out = tmp_path / "e.csv"
    assert run(["gen", "--n", 0, "--out", out], capsys)[0] == 0
    assert out.read_bytes() == b"s,l\n"


def test_gen_is_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        run(["gen", "--n", 50, "--seed", 9, "--dist", "correlated", "--out", path],
            capsys)
    assert a.read_bytes() == b.read_bytes()


def test_gen_anticorrelated(tmp_path, capsys):
    out = tmp_path / "g.csv"
    run(["gen", "--n", 4, "--seed", 1, "--dist", "anticorrelated",
         "--rho-max", 0.6, "--out", out], capsys)
    lines = out.read_text().splitlines()
    assert lines[0] == "s,l" and len(lines) == 5
    assert all(0 < float(x) <= 0.6 for line in lines[1:] for x in line.split(","))


def test_gen_rejects_bad_rho(capsys):
    assert run(["gen", "--n", 3, "--rho-max", 0], capsys)[0] == 2


def test_pack_trace(trace_csv, capsys):
    code, out = run(["pack", trace_csv], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["q"] == 2 and rep["caseClass"] == "all-complete"
    assert rep["boundaries"] == [1, 3, 5] and rep["order"] == [1, 2, 3, 4]
    assert rep["metrics"]["swaps"] == 0


def test_pack_reference_same_partition(trace_csv, capsys):
    _, a = run(["pack", trace_csv], capsys)
    _, b = run(["pack", trace_csv, "--algorithm", "reference"], capsys)
    a, b = json.loads(a), json.loads(b)
    assert (a["order"], a["boundaries"]) == (b["order"], b["boundaries"])


def test_pack_empty_file(tmp_path, capsys):
    p = tmp_path / "empty.csv"
    p.write_text("")
    code, out = run(["pack", p], capsys)
    assert code == 0 and json.loads(out)["q"] == 0


def test_pack_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("s,l\n0.1,zz\n")
    assert run(["pack", bad], capsys)[0] == 2
    bad.write_text("a,b\n0.1,0.1\n")
    assert run(["pack", bad], capsys)[0] == 2
    big = tmp_path / "big.csv"
    big.write_text("s,l\n0.1,1.5\n")
    assert run(["pack", big], capsys)[0] == 3
    assert run(["pack", tmp_path / "missing.csv"], capsys)[0] == 2


def test_pack_raw_units(tmp_path, capsys):
    raw = tmp_path / "raw.csv"
    raw.write_text("size,load\n60,20\n20,60\n60,20\n20,60\n")
    assert run(["pack", raw], capsys)[0] == 2
    code, out = run(["pack", raw, "--cap-s", 100, "--cap-l", 100], capsys)
    assert code == 0 and json.loads(out)["q"] == 2
    assert run(["pack", raw, "--cap-s", 50, "--cap-l", 100], capsys)[0] == 3


def test_pack_rho_override(trace_csv, capsys):
    code, out = run(["pack", trace_csv, "--rho", 0.9], capsys)
    assert code == 0 and json.loads(out)["rho"] == 0.9
    assert run(["pack", trace_csv, "--rho", 0.1], capsys)[0] == 2


def test_pack_internal_assertion(trace_csv, capsys, monkeypatch):
    def broken(*a, **k):
        raise InvariantViolation("boom")
    monkeypatch.setattr(cli, "pack", broken)
    assert run(["pack", trace_csv, "--debug-assertions"], capsys)[0] == 4


def test_pack_three_dims(tmp_path, capsys):
    p = tmp_path / "t.csv"
    p.write_text("s,l,t\n0.4,0.3,0.9\n0.4,0.3,0.9\n")
    code, out = run(["pack", p], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["dims"] == 3 and rep["q"] == 2
    assert "T" in rep["perBin"][0]


def test_verify_round_trip(trace_csv, tmp_path, capsys):
    report = tmp_path / "r.json"
    permuted = tmp_path / "perm.csv"
    run(["pack", trace_csv, "--out", report, "--permuted-out", permuted], capsys)
    code, out = run(["verify", trace_csv, report], capsys)
    assert code == 0 and json.loads(out)["feasible"]
    bounds = tmp_path / "b.json"
    bounds.write_text(json.dumps(json.loads(report.read_text())["boundaries"]))
    assert run(["verify", permuted, bounds], capsys)[0] == 0


def test_verify_failures(trace_csv, tmp_path, capsys):
    overlap = tmp_path / "o.json"
    overlap.write_text(json.dumps([1, 3, 2, 5]))
    code, out = run(["verify", trace_csv, overlap], capsys)
    assert code == 2 and json.loads(out)["error"] == "MalformedBoundaries"
    heavy = tmp_path / "h.json"
    heavy.write_text(json.dumps({"order": [1, 3, 2, 4], "boundaries": [1, 3, 5]}))
    code, out = run(["verify", trace_csv, heavy], capsys)
    assert code == 1 and json.loads(out)["feasible"] is False
    garbage = tmp_path / "g.json"
    garbage.write_text("{")
    assert run(["verify", trace_csv, garbage], capsys)[0] == 2


def test_verify_bound_certificate(trace_csv, tmp_path, capsys):
    report = tmp_path / "r.json"
    run(["pack", trace_csv, "--out", report], capsys)
    code, out = run(["verify", trace_csv, report, "--reference-bins", 2], capsys)
    assert code == 0 and json.loads(out)["boundOk"] is True
    code, _ = run(["verify", trace_csv, report, "--reference-bins", 0], capsys)
    assert code == 1


def test_oracle_command(trace_csv, capsys):
    code, out = run(["oracle", trace_csv], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["bins"] == 2 and rep["lowerBound"] == 2
    assert sorted(set(rep["assignment"])) == [1, 2]
    assert run(["oracle", trace_csv, "--oracle-limit", 3], capsys)[0] == 2


def test_compare_with_oracle(trace_csv, capsys):
    code, out = run(["compare", trace_csv, "--oracle", "--json"], capsys)
    rows = {r["algorithm"]: r for r in json.loads(out)}
    assert code == 0
    lin = rows["linear"]
    assert lin["q"] == 2 and lin["optimum"] == 2 and lin["certificate"] == "PASS"
    code, out = run(["compare", trace_csv, "--oracle"], capsys)
    assert code == 0 and "PASS" in out and out.splitlines()[0].startswith("algorithm")


def test_compare_s_only(tmp_path, capsys):
    p = tmp_path / "s.csv"
    run(["gen", "--n", 40, "--dist", "s-only", "--out", p], capsys)
    code, out = run(["compare", p, "--algorithms", "ff", "linear", "--json"], capsys)
    rows = json.loads(out)
    assert code == 0 and [r["algorithm"] for r in rows] == ["ff", "linear"]
    assert all(r["feasible"] for r in rows)


def test_compare_unknown_algorithm(trace_csv, capsys):
    assert run(["compare", trace_csv, "--algorithms", "magic"], capsys)[0] == 2


def test_bench(capsys):
    code, out = run(["bench", "--sizes", 2000, "--repeats", 1, "--json"], capsys)
    rows = json.loads(out)
    assert code == 0 and len(rows) == 1
    r = rows[0]
    assert r["swaps"] <= r["swapBudget"] and r["cursorAdvances"] <= r["scanBudget"]
    assert run(["bench", "--sizes", 100, "--repeats", 0], capsys)[0] == 2


def test_module_entry_point(trace_csv):
    proc = subprocess.run([sys.executable, "-m", "vecpack", "pack", trace_csv],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["q"] == 2
