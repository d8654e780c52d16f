import json
from importlib import resources

import pytest

from hitcalc import hit
from hitcalc.hit import cohit_basis
from hitcalc.cli import EXIT_GUARD, EXIT_OK, EXIT_USAGE, main


def data(name):
    return str(resources.files("hitcalc").joinpath("data", name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohit_json(capsys):
    code, out, _ = run(capsys, "cohit", "--n", "3", "--d", "15")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["dim"] == 13 == len(report["admissibles"])
    assert report["n"] == 3 and report["d"] == 15 and report["part"] == "full"


def test_cohit_text(capsys):
    code, out, _ = run(capsys, "cohit", "--n", "2", "--d", "3", "--format", "text")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "dim (QP_2)_3 [full] = 3"


def test_weight(capsys):
    code, out, _ = run(capsys, "weight", "--n", "4", "--d", "33", "--omega", "3,1,1,1,1",
                       "--part", "positive")
    assert code == EXIT_OK and json.loads(out)["dim"] == 17


def test_kameko_kernel(capsys):
    code, out, _ = run(capsys, "kameko-kernel", "--n", "3", "--d", "15")
    report = json.loads(out)
    assert code == EXIT_OK and report["d"] == 15
    assert report["total"] == 13 - cohit_basis(3, 6).dim


def test_invariants(capsys):
    code, out, _ = run(capsys, "invariants", "--n", "5", "--d", "14", "--group", "gl")
    report = json.loads(out)
    assert code == EXIT_OK and report["dim"] == 1 and report["group"] == "gl"


def test_verify_invariant(capsys):
    code, out, _ = run(capsys, "verify-invariant", "--n", "5", "--d", "14", "--group",
                       "general_linear", "--file", data("zeta.poly"))
    assert code == EXIT_OK
    assert json.loads(out) == {"n": 5, "d": 14, "group": "gl", "invariant": True}


def test_check_annihilated_and_pairing(capsys, tmp_path):
    code, out, _ = run(capsys, "check-annihilated", "--n", "5", "--file", data("zeta0_tilde.dp"))
    assert code == EXIT_OK and json.loads(out)["annihilated"] is True
    dual = tmp_path / "a.dp"
    dual.write_text("a1^(2)*a2")
    poly = tmp_path / "f.poly"
    poly.write_text("u1^2*u2 + u1*u2^2")
    code, out, _ = run(capsys, "pairing", "--file", str(dual), "--poly", str(poly), "--format", "text")
    assert code == EXIT_OK and out.strip() == "1"


@pytest.mark.parametrize("argv", [
    ["cohit", "--n", "3"],
    ["cohit", "--n", "0", "--d", "3"],
    ["weight", "--n", "3", "--d", "10"],
    ["weight", "--n", "3", "--d", "10", "--omega", "3,3"],
    ["invariants", "--n", "3", "--d", "5"],
    ["pairing", "--file", "x"],
    ["cohit", "--n", "3", "--d", "5", "--threads", "0"],
    ["nonsense"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_missing_file_is_usage_error(capsys, tmp_path):
    code, _, err = run(capsys, "check-annihilated", "--file", str(tmp_path / "missing.dp"))
    assert code == EXIT_USAGE and "error" in err


def test_size_guard(capsys):
    code, _, err = run(capsys, "cohit", "--n", "6", "--d", "60")
    assert code == EXIT_GUARD and "--allow-large" in err


def test_output_identical_with_cold_and_warm_cache(capsys, tmp_path):
    argv = ["cohit", "--n", "4", "--d", "13", "--cache-dir", str(tmp_path)]
    hit.clear_cache()
    _, cold, _ = run(capsys, *argv)
    assert any(tmp_path.iterdir())
    hit.clear_cache()
    _, warm, _ = run(capsys, *argv)
    assert cold.encode() == warm.encode()
    hit.clear_cache()
