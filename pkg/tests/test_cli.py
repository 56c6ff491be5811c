import json
import subprocess
import sys

import pytest

from hilbreg import analysis, cli
from hilbreg.sweep import SweepConfig, run_instance


def write(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def spec(n, ideal, **options):
    return {"version": "1", "ring": {"vars": n}, "ideal": ideal, "options": options}


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def report_of(tmp_path, doc, capsys):
    code, out, _ = run(["analyze", write(tmp_path, doc)], capsys)
    return code, json.loads(out)


def test_analyze_quadric(tmp_path, capsys):
    code, r = report_of(tmp_path, spec(3, {"kind": "completeIntersection", "degrees": [2]}), capsys)
    assert code == 0
    assert r["coefficients"]["e"] == ["2", "1"]
    assert r["gotzmann"]["B"] == ["2", "2"] and r["gotzmann"]["c"] == ["1", "1"]
    assert r["bounds"]["blancafort"]["p1"] == "1" and r["bounds"]["theoremA"]["p1"] == "7"
    assert r["oracle"]["reg"] == "1"
    assert all(v["status"] in ("pass", "no-oracle") for v in r["verdicts"])


def test_analyze_cyclic_polytope(tmp_path, capsys):
    code, r = report_of(tmp_path, spec(4, {"kind": "cyclicPolytope", "d": 2}), capsys)
    assert code == 0
    assert r["coefficients"]["e"] == ["6", "8"]
    assert r["gotzmann"]["B"] == ["6", "13"]
    assert r["bounds"]["theoremA"]["p1"] == "79"
    assert r["bounds"]["lowerRoots"] == "2"
    assert r["bounds"]["propD1"]["isEquality"] is True
    assert r["bounds"]["propD1"]["extremalSeries"] == ["1", "2", "3"]
    assert r["oracle"]["reg"] == "2"


def test_analyze_powers(tmp_path, capsys):
    code, r = report_of(tmp_path, spec(3, {"kind": "powers", "c": 2, "a": 1}), capsys)
    assert code == 0
    assert r["coefficients"]["e"][0] == "3"
    assert r["bounds"]["lowerBinomial"] == "1"
    assert r["bounds"]["propD1"]["isEquality"] is True
    assert r["oracle"]["reg"] == "1"


def test_dimension_zero_report(tmp_path, capsys):
    code, r = report_of(tmp_path, spec(2, {"kind": "powers", "c": 2, "a": 1}), capsys)
    assert code == 0
    assert r["bounds"] == {"error": "DimensionZero"}
    assert r["hilbert"]["d"] == "0"


def test_reports_are_byte_identical(tmp_path, capsys):
    path = write(tmp_path, spec(4, {"kind": "lexOf", "inner": {"kind": "completeIntersection", "degrees": [2, 2]}},
                                maxLexDegree=7))
    first = run(["analyze", path], capsys)[1]
    second = run(["analyze", path], capsys)[1]
    assert first == second
    out = tmp_path / "report.json"
    assert run(["analyze", path, "--report", str(out)], capsys)[0] == 0
    assert out.read_text() == first


def test_big_integers_serialize_as_text():
    assert analysis.dumps({"x": 3 ** 200}) == '{\n  "x": "%d"\n}\n' % 3 ** 200


def test_exit_code_failed_verdict(tmp_path, capsys):
    # (x^2, xy) is not saturated, so forcing the depth-positive bound is wrong
    doc = spec(2, {"kind": "explicit", "generators": [[2, 0], [1, 1]]}, depthPositive=True)
    code, out, err = run(["analyze", write(tmp_path, doc)], capsys)
    assert code == 1
    assert "theoremB.depthPositive" in err


@pytest.mark.parametrize("doc", [
    {"ring": {"vars": 3}, "ideal": {"kind": "nonsense"}},
    {"ring": {}, "ideal": {"kind": "powers", "c": 1, "a": 1}},
    spec(3, {"kind": "powers", "c": 1}),
    spec(3, {"kind": "completeIntersection", "degrees": [2]}, ell=0),
    spec(2, {"kind": "completeIntersection", "degrees": [2, 2, 2]}),
    spec(2, {"kind": "explicit", "generators": [[0, 0]]}),
    dict(spec(3, {"kind": "powers", "c": 1, "a": 1}), version="9"),
])
def test_exit_code_invalid_input(tmp_path, capsys, doc):
    code, _, err = run(["analyze", write(tmp_path, doc)], capsys)
    assert code == 2 and err.startswith("error:")


def test_exit_code_missing_or_broken_file(tmp_path, capsys):
    assert run(["analyze", str(tmp_path / "nope.json")], capsys)[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(["analyze", str(bad)], capsys)[0] == 2


def test_exit_code_internal_inconsistency(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(analysis, "verify_decomposition", lambda g, p: False)
    doc = spec(3, {"kind": "completeIntersection", "degrees": [2]})
    assert run(["analyze", write(tmp_path, doc)], capsys)[0] == 3


def test_levels_option(tmp_path, capsys):
    path = write(tmp_path, spec(4, {"kind": "powers", "c": 2, "a": 1}))
    code, out, _ = run(["analyze", path, "--levels", "1,2"], capsys)
    r = json.loads(out)
    assert code == 0 and set(r["bounds"]["theoremA"]) == {"p1", "p2"}


def test_lexify_command(tmp_path, capsys):
    path = write(tmp_path, spec(4, {"kind": "completeIntersection", "degrees": [2, 2]}))
    code, out, _ = run(["lexify", path, "--max-lex-degree", "7"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "degree 2: x1^2, x1*x2"
    assert lines[1] == "degree 3: x1*x3^2"
    assert run(["lexify", path, "--max-lex-degree", "6"], capsys)[0] == 2


def test_sweep_command(tmp_path, capsys):
    code, out, _ = run(["sweep", "--seed", "7", "--count", "30", "--failures-dir", str(tmp_path)], capsys)
    summary = json.loads(out)
    assert code == 0 and summary["failureCount"] == "0" and summary["instances"] == "30"


def test_selftest(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0
    assert out.count("PASS") == 5 and "FAIL" not in out


def test_report_replays(tmp_path, capsys):
    path = write(tmp_path, spec(4, {"kind": "cyclicPolytope", "d": 2}))
    first = run(["analyze", path], capsys)[1]
    assert run(["analyze", write(tmp_path, json.loads(first), "replay.json")], capsys)[1] == first


def test_failure_dump_replays(tmp_path, monkeypatch, capsys):
    monkeypatch.setattr(analysis, "key_lemma_bound", lambda e, j: -1)
    cfg = SweepConfig(seed=7, count=1)
    r = run_instance(cfg, 0)
    assert r.dump["sweep"] == {"seed": 7, "index": 0, "generator": cfg.generator}
    replay = analysis.analyze(analysis.parse_spec(json.loads(analysis.dumps(r.dump))))
    assert replay.to_dict()["verdicts"] == r.dump["verdicts"]


def test_module_entry_point(tmp_path):
    path = write(tmp_path, spec(3, {"kind": "completeIntersection", "degrees": [2]}))
    proc = subprocess.run([sys.executable, "-m", "hilbreg", "analyze", path], capture_output=True, text=True)
    assert proc.returncode == 0 and '"theoremA"' in proc.stdout
