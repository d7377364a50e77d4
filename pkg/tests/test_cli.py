import json
import subprocess
import sys

import pytest

from qtorsion.cli import fold_configurations, main, run_scan
from qtorsion.database import fixture


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def jsonl(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_torsion(capsys):
    code, out, _ = run(capsys, "torsion", "11a1")
    assert code == 0 and "E(Q)_tors = C5" in out
    code, out, _ = run(capsys, "torsion", "[0,0,0,0,1]", "--format=jsonl")
    rec = jsonl(out)[0]
    assert rec["torsion"] == "C6" and len(rec["generators"]) == 1


def test_torsion_over_field(capsys):
    code, out, _ = run(capsys, "torsion-k", "90c4", "x^4-6")
    assert code == 0 and "C2×C4" in out
    code, out, _ = run(capsys, "torsion-k", "50a2", "x^4+x^3+x^2+x+1", "--format=jsonl")
    assert jsonl(out)[0]["torsion"] == "C5"


def test_bad_inputs(capsys):
    assert run(capsys, "torsion", "999z9")[0] == 2
    assert run(capsys, "torsion-k", "11a1", "x^3-2")[0] == 2
    assert run(capsys, "torsion-k", "11a1", "x^2-1")[0] == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_growth_worked_curve(capsys):
    code, out, _ = run(capsys, "growth", "50a2", "--verbose")
    assert code == 0
    assert "C3       over Q(√−3)  [x^2 + 3]" in out
    assert "C5       over Q(ζ5)" in out
    assert "x^2 + 11*x + 29" in out and "3*x + 19" in out
    code, out, _ = run(capsys, "growth", "50a2", "--format=jsonl")
    recs = jsonl(out)
    assert {(r["field"]["label"], r["H"]) for r in recs if "H" in r} == {("Q(sqrt(-3))", "C3"), ("Q(zeta5)", "C5")}
    assert recs[-1]["configuration"] == "(3),(5)"


def test_growth_none(capsys):
    code, out, _ = run(capsys, "growth", "162b1")
    assert "no growth" in out and "configuration: -" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "tables")
    assert code == 0 and "C20" in out
    code, out, _ = run(capsys, "tables", "--format=jsonl")
    recs = jsonl(out)
    cells = [r for r in recs if r.get("type") == "cell"]
    assert any(r["G"] == "C4" and r["H"] == "C20" and r["verdict"] == "teo-5" for r in cells)


MINI = "\n".join([
    "11 a 1 [0,-1,1,-10,-20] 0 5",
    "14 a 1 [1,0,1,4,-6] 0 6",
    "50 a 1 [1,0,1,-1,-2] 0 3",
    "50 a 2 [1,0,1,-126,-552] 0 1",
    "50 a 3 [1,0,1,-76,298] 0 3",
    "50 a 4 [1,0,1,549,-2202] 0 1",
    "162 b 1 [1,-1,1,-5,5] 0 3",
    "450 b 2 [1,-1,1,-1130,14897] 0 3",
])


@pytest.fixture
def mini_db(tmp_path, monkeypatch):
    p = tmp_path / "mini.txt"
    p.write_text(MINI + "\n")
    monkeypatch.setenv("QTORSION_CURVES", str(p))
    return p


def test_scan_small_database(capsys, mini_db):
    code, out, _ = run(capsys, "scan", str(mini_db), "--max-conductor", "100")
    assert code == 0
    assert "scanned 6 curves" in out
    assert "(5,5)" in out and "(3),(5)" in out
    code, out2, _ = run(capsys, "scan", str(mini_db), "--max-conductor", "100")
    assert out == out2


def test_scan_jsonl_and_quarantine(capsys, tmp_path):
    p = tmp_path / "db.txt"
    p.write_text("11 a 1 [0,-1,1,-10,-20] 0 5\nnot a curve\n")
    code, out, err = run(capsys, "scan", str(p), "--format=jsonl")
    assert "line 2" in err
    recs = jsonl(out)
    assert recs[0]["type"] == "configuration" and recs[0]["configuration"] == "(5,5)"
    assert recs[-1] == {"type": "bound", "h": 1, "witnesses": ["11a1"]}


def test_parallel_scan_equals_serial():
    recs = [r for r in fixture().values() if r.label in ("11a1", "14a1", "50a2", "162b1")]
    serial = run_scan(recs, jobs=1)
    parallel = run_scan(recs, jobs=2)
    strip = lambda rs: [{k: v for k, v in r.items() if k != "seconds"} for r in rs]
    assert strip(serial) == strip(parallel)
    assert fold_configurations(serial) == fold_configurations(reversed(parallel))


def test_fold_marks_new_configurations():
    fake = [{"label": "1a1", "G": "C2", "configuration": "(4)^7", "size": 7, "entries": ["C4"] * 7},
            {"label": "2a1", "error": "boom"}]
    folded = fold_configurations(fake)
    assert folded["configurations"][0]["status"] == "new"
    assert folded["quarantine"] == [fake[1]]
    assert folded["h"] == 7


def test_verify_with_reduced_fixture(capsys, mini_db):
    code, out, _ = run(capsys, "verify", "--kubert-samples", "1")
    assert "SKIP" in out and "growth 90c4" in out and "missing data" in out
    assert "PASS    C15 curves: j(50a4)" in out
    assert "FAIL" not in out
    assert code == 0


def test_verify_names_a_corrupted_curve(capsys, tmp_path, monkeypatch):
    p = tmp_path / "bad.txt"
    p.write_text(MINI.replace("[1,0,1,549,-2202]", "[1,0,1,549,-2203]") + "\n")
    monkeypatch.setenv("QTORSION_CURVES", str(p))
    code, out, _ = run(capsys, "verify", "--kubert-samples", "1", "--format=jsonl")
    failed = [r for r in jsonl(out) if r.get("status") == "FAIL"]
    assert code == 1
    assert any("50a4" in r["check"] for r in failed)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qtorsion", "torsion", "11a1"], capture_output=True, text=True)
    assert res.returncode == 0 and "C5" in res.stdout
