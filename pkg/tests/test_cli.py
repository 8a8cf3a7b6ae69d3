import dataclasses
import json

import pytest

from fockrep import catalogue
from fockrep.cli import main, parse_params
from fockrep.fock import Poly
from fockrep.scalars import rat
from fockrep.weyl import WeylElement


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_params():
    params = parse_params(["n=3", "delta=-1/3"])
    assert params == {"n": rat(3), "delta": rat(-1, 3)}
    with pytest.raises(Exception):
        parse_params(["oops"])


def test_list_has_sixteen(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert len(entries) == 16


def test_list_filter_super(capsys):
    code, out, _ = run(capsys, "list", "--filter", "super", "--format", "json")
    assert code == 0
    ids = {e["id"] for e in json.loads(out)}
    assert ids == {"osp22", "osp22_translated", "osp22_metaplectic", "gl_super"}


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "sl2_standard", "n=2")
    assert code == 0
    assert "result: PASS" in out


def test_verify_usage_errors_exit_two(capsys):
    code, _, err = run(capsys, "verify", "sl2q", "alpha=2", "q=1")
    assert code == 2 and "q = 1" in err
    code, _, err = run(capsys, "verify", "does_not_exist")
    assert code == 2 and "unknown representation" in err
    code, _, err = run(capsys, "verify", "sl2_standard", "n=abc")
    assert code == 2


def test_verify_failure_exit_one(capsys, monkeypatch):
    # a deliberately corrupted catalogue entry must drive exit code 1
    def broken(params):
        rep = catalogue.build("sl2_standard", {"n": rat(2)})
        gens = dict(rep.generators)
        gens["J0"] = gens["J0"] + Poly(WeylElement.one(rep.modes))
        return dataclasses.replace(rep, rep_id="broken_demo", generators=gens)

    monkeypatch.setitem(catalogue._CATALOGUE, "broken_demo", (broken, (), "test"))
    code, out, _ = run(capsys, "verify", "broken_demo")
    assert code == 1
    assert "FAIL" in out and "witness" in out


def test_matrix_diagonal_output(capsys):
    code, out, _ = run(capsys, "matrix", "sl2_standard", "n=2",
                       "--gen", "J0", "--format", "json")
    assert code == 0
    data = json.loads(out)
    mat = data["matrix"]
    assert mat[0][0] == {"r": "-1"}
    assert mat[1][1] == {"r": "0"}
    assert mat[2][2] == {"r": "1"}
    assert data["overflow_columns"] == []


def test_matrix_metaplectic_no_overflow_from_lowering(capsys):
    code, out, _ = run(capsys, "matrix", "sl2_metaplectic",
                       "--gen", "J+", "--cutoff", "4", "--format", "json")
    assert code == 0
    assert json.loads(out)["overflow_columns"] == []


def test_matrix_glk_raising(capsys):
    code, out, _ = run(capsys, "matrix", "glk", "k=2", "n=1",
                       "--gen", "J2+", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["matrix"]) == 2
    assert data["matrix"][1][0] == {"r": "1"}  # J2+ |0> = b |0> at n = 1


def test_matrix_realizations(capsys):
    code, out, _ = run(capsys, "matrix", "sl2_standard", "n=2", "--gen", "J-",
                       "--realization", "diff", "--format", "json")
    assert code == 0
    code, out2, _ = run(capsys, "matrix", "sl2_standard", "n=2", "--gen", "J-",
                        "--format", "json")
    assert json.loads(out)["matrix"] == json.loads(out2)["matrix"]


def test_output_determinism(capsys):
    _, out1, _ = run(capsys, "verify", "osp22", "n=2", "--format", "json")
    _, out2, _ = run(capsys, "verify", "osp22", "n=2", "--format", "json")
    assert out1 == out2  # byte-identical
    _, m1, _ = run(capsys, "matrix", "osp22", "n=2", "--gen", "T+", "--format", "json")
    _, m2, _ = run(capsys, "matrix", "osp22", "n=2", "--gen", "T+", "--format", "json")
    assert m1 == m2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "sl2_standard", "n=1",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert data["rep"] == "sl2_standard"


def test_casimir_command(capsys):
    code, out, _ = run(capsys, "casimir", "sl2_metaplectic", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["measured"] == "3/16" and data["claim_status"] == "MATCH"
    code, _, err = run(capsys, "casimir", "sl2_clifford")
    assert code == 2 and "no Casimir" in err


def test_cross_command(capsys):
    code, out, _ = run(capsys, "cross", "sl2_translated", "n=2", "delta=1/2",
                       "--realization", "fd")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_report_all_small(capsys):
    code, out, _ = run(capsys, "report-all", "--grid", "small")
    assert code == 0
    assert "all PASS" in out
    assert len([l for l in out.splitlines() if l.startswith("PASS")]) == 16


def test_unavailable_realization_exits_two(capsys):
    code, _, err = run(capsys, "cross", "sl2q", "alpha=2", "q=2",
                       "--realization", "fd")
    assert code == 2 and "finite-difference" in err
    code, _, err = run(capsys, "matrix", "sl2_translated", "n=1", "delta=1",
                       "--gen", "J0", "--realization", "diff")
    assert code == 2 and "differential" in err


def test_decimal_flag(capsys):
    code, out, _ = run(capsys, "matrix", "sl2_oscillator", "n=1",
                       "--gen", "J-", "--decimal", "--format", "json")
    assert code == 0
    assert "matrix_decimal" in json.loads(out)
