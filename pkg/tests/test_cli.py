import json
import subprocess
import sys

import pytest

from supersmooth.cli import main


def sn(L, *terms):
    return json.dumps({"L": L, "terms": [{"gens": list(g), "re": str(c)} for g, c in terms]})


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def pt(L, even=(), odd=()):
    return json.dumps({"L": L, "even": [json.loads(e) for e in even], "odd": [json.loads(o) for o in odd]})


POLY_SF = json.dumps({"m": 1, "n": 2, "coeffs": [
    {"a": [1, 1], "fn": {"kind": "poly", "m": 1, "terms": [{"exps": [0], "coef": "1"}]}},
    {"a": [0, 1], "fn": {"kind": "poly", "m": 1, "terms": [{"exps": [1], "coef": "1"}]}}]})
POINTS = json.dumps([json.loads(pt(4, [sn(4, ((), 2), ((3, 4), 1))], [sn(4, ((1,), 1)), sn(4, ((2,), 1))]))])


def test_mul_anticommutes(capsys):
    code, out, _ = run(capsys, "mul", sn(2, ((2,), 1)), sn(2, ((1,), 1)))
    assert code == 0
    assert json.loads(out)["terms"] == [{"gens": [1, 2], "re": "-1", "im": "0"}]


def test_add_dist_project(capsys):
    code, out, _ = run(capsys, "add", sn(2, ((), 1)), sn(2, ((1, 2), 2)))
    assert code == 0 and len(json.loads(out)["terms"]) == 2
    code, out, _ = run(capsys, "dist", sn(3))
    assert code == 0 and json.loads(out) == {"dist": "0"}
    code, _, err = run(capsys, "project", sn(2, ((1,), 1)), "3")
    assert code == 2 and "larger skeleton" in err
    code, out, _ = run(capsys, "project", sn(3, ((1,), 1), ((3,), 1)), "2")
    assert json.loads(out)["terms"] == [{"gens": [1], "re": "1", "im": "0"}]


def test_skeleton_promotion_note(capsys):
    code, out, err = run(capsys, "mul", sn(2, ((1,), 1)), sn(3, ((3,), 1)))
    assert code == 0 and "mismatch" in err and json.loads(out)["L"] == 3


def test_continue(capsys):
    cube = json.dumps({"kind": "poly", "m": 1, "terms": [{"exps": [3]}]})
    code, out, _ = run(capsys, "continue", cube, pt(2, [sn(2, ((), 2), ((1, 2), 1))]))
    assert code == 0
    assert {(tuple(t["gens"]), t["re"]) for t in json.loads(out)["terms"]} == {((), "8"), ((1, 2), "12")}
    const = json.dumps({"kind": "poly", "m": 1, "terms": [{"exps": [0], "coef": "5"}]})
    code, out, _ = run(capsys, "continue", const, pt(2, [sn(2, ((), 2))]))
    assert json.loads(out)["terms"][0]["re"] == "5"
    log = json.dumps({"kind": "log", "affine": {"coeffs": ["1"]}})
    code, _, err = run(capsys, "continue", log, pt(2, [sn(2, ((1, 2), 1))]))
    assert code == 2 and "error" in err


def test_derive_and_extract(capsys):
    code, out, _ = run(capsys, "derive", POLY_SF, json.loads(POINTS)[0] and json.dumps(json.loads(POINTS)[0]),
                       "--coord", "1:[3,4]")
    assert code == 0
    code, out, _ = run(capsys, "derive", POLY_SF, json.dumps(json.loads(POINTS)[0]), "--odd", "2")
    assert code == 0
    code, _, err = run(capsys, "derive", POLY_SF, json.dumps(json.loads(POINTS)[0]))
    assert code == 2 and "exactly one" in err
    code, out, _ = run(capsys, "extract", POLY_SF, json.dumps(json.loads(POINTS)[0]))
    coeffs = {tuple(c["a"]): c["value"]["terms"] for c in json.loads(out)["coefficients"]}
    assert coeffs[(1, 1)] == [{"gens": [], "re": "1", "im": "0"}]


def test_taylor(capsys):
    X = json.dumps(json.loads(POINTS)[0])
    code, out, _ = run(capsys, "taylor", POLY_SF, X, X, "--order", "3")
    assert code == 0 and json.loads(out)["exact"] is True


def test_cr_check_exit_codes(tmp_path, capsys):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "cr-check", POLY_SF, POINTS, "--out", str(report))
    assert code == 0 and "overall: PASS" in out
    assert json.loads(report.read_text())["passed"] is True
    body = json.dumps({"kind": "blackbox", "name": "body-coordinate"})
    pts = json.dumps([json.loads(pt(3, [sn(3, ((), 1))]))])
    code, out, _ = run(capsys, "cr-check", body, pts, "--out", str(report))
    assert code == 1 and "cauchy-riemann" in out
    assert json.loads(report.read_text())["checks"][0]["witnesses"]["failure_count"] > 0


def test_witness_and_suite(capsys):
    code, _, _ = run(capsys, "witness", POLY_SF, POINTS)
    assert code == 0
    code, out, _ = run(capsys, "suite", POLY_SF, POINTS)
    assert code == 0
    code, out, _ = run(capsys, "suite", POLY_SF, POINTS, "--suite", "cr")
    assert code == 0 and "gateaux" not in out
    ctb = json.dumps({"kind": "blackbox", "name": "coefficient-to-body"})
    code, _, _ = run(capsys, "suite", ctb, "--suite", "projectability", "--pairs", "1,3")
    assert code == 1
    code, _, _ = run(capsys, "suite", ctb, "--suite", "projectability", "--pairs", "2,4")
    assert code == 0


def test_solve_sigma_and_dual(capsys):
    inp = json.dumps({"L": 2, "A": [json.loads(sn(2, ((1, 2), 1))), json.loads(sn(2))]})
    code, out, _ = run(capsys, "solve-sigma", inp)
    assert code == 0 and json.loads(out)["F"]["terms"][0]["gens"] == [2]
    bad = json.dumps({"L": 2, "A": [json.loads(sn(2, ((2,), 1))), json.loads(sn(2))]})
    code, out, _ = run(capsys, "solve-sigma", bad)
    assert code == 1 and json.loads(out)["witness_pair"] == [1, 1]
    swap = json.dumps({"kind": "coefficient-linear", "L": 2,
                       "images": [{"gens": [1], "value": json.loads(sn(2, ((2,), 1)))}]})
    code, out, _ = run(capsys, "dual", swap)
    assert code == 1 and json.loads(out)["status"] == "infeasible"
    rm = json.dumps({"kind": "right-multiply", "L": 4, "u": json.loads(sn(4, ((), 1), ((1, 2), 1)))})
    code, out, _ = run(capsys, "dual", rm)
    assert code == 0 and json.loads(out)["status"] == "representable"


@pytest.mark.parametrize("argv, fragment", [
    (["mul", '{"L": 2, "terms": [', "{}"], "line 1, column"),
    (["mul", "/no/such/file.json", "{}"], "cannot read"),
    (["dist", '{"L": 2, "terms": []}', "--tol", "0"], "--tol"),
    (["dist", '{"L": 2, "terms": [{"gens": [3]}]}'], "outside skeleton"),
    (["mul", '{"L": 3, "terms": [{"gens": [3]}]}', '{"L": 2, "terms": []}', "--skeleton", "2"], "beyond --skeleton"),
])
def test_usage_errors(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2 and fragment in err


def test_random_suite_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "suite", "--count", "5", "--seed", "7", "--out", str(a))[0] == 0
    assert run(capsys, "suite", "--count", "5", "--seed", "7", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supersmooth", "dist", '{"L": 1, "terms": [{"gens": [1]}]}'],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"dist": "1/8"}
