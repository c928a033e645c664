"""End-to-end runs of the command-line interface against problem files."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from orenak.cli import InputError, load_problem, main

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def write_problem(tmp_path, doc, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -------------------------------------------------------------------- loading


def test_load_problem_shear():
    problem = load_problem(str(PROBLEMS / "shear.json"))
    assert problem.names == ["z1", "z2"]
    assert problem.sigma.jacobian == 1
    assert problem.bounds == {"max_degree": 3}


def test_load_problem_missing_file():
    with pytest.raises(InputError, match="cannot read"):
        load_problem("/nonexistent/problem.json")


def test_load_problem_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(InputError, match="not valid JSON"):
        load_problem(str(path))


def test_load_problem_validates_shape(tmp_path):
    with pytest.raises(InputError, match="'vars'"):
        load_problem(write_problem(tmp_path, {"sigma": [], "delta": []}))
    with pytest.raises(InputError, match="unknown problem keys"):
        load_problem(
            write_problem(
                tmp_path,
                {"vars": ["z"], "sigma": ["z"], "delta": ["0"], "extra": 1},
            )
        )
    with pytest.raises(InputError, match="one expression per variable"):
        load_problem(
            write_problem(tmp_path, {"vars": ["z1", "z2"], "sigma": ["z1"], "delta": ["0", "0"]})
        )


def test_load_problem_reports_parse_position(tmp_path):
    with pytest.raises(InputError, match=r"sigma\[0\]"):
        load_problem(
            write_problem(tmp_path, {"vars": ["z"], "sigma": ["z +"], "delta": ["0"]})
        )


def test_load_problem_rejects_non_automorphism(tmp_path):
    with pytest.raises(InputError, match="not a usable automorphism"):
        load_problem(
            write_problem(tmp_path, {"vars": ["z"], "sigma": ["z^2"], "delta": ["0"]})
        )


def test_load_problem_rejects_inconsistent_delta(tmp_path):
    doc = {"vars": ["z1", "z2"], "sigma": ["2*z1", "3*z2"], "delta": ["1", "1"]}
    with pytest.raises(InputError):
        load_problem(write_problem(tmp_path, doc))


def test_load_problem_checks_bounds(tmp_path):
    doc = {
        "vars": ["z"],
        "sigma": ["z"],
        "delta": ["1"],
        "bounds": {"max_degree": -1},
    }
    with pytest.raises(InputError, match="nonnegative integer"):
        load_problem(write_problem(tmp_path, doc))
    doc["bounds"] = {"weird": 3}
    with pytest.raises(InputError, match="unknown bounds"):
        load_problem(write_problem(tmp_path, doc))


# ------------------------------------------------------------------- commands


def test_kappa_text(capsys):
    code, out, _ = run_cli(capsys, "kappa", "--input", str(PROBLEMS / "q2.json"))
    assert code == 0
    assert "kappa = 1 / z1" in out


def test_kappa_differential_case(capsys):
    code, out, _ = run_cli(capsys, "kappa", "--input", str(PROBLEMS / "weyl.json"))
    assert code == 0
    assert "undefined" in out


def test_jacobian_json(capsys):
    code, out, _ = run_cli(
        capsys, "jacobian", "--input", str(PROBLEMS / "q2.json"), "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"jacobian": "2"}


def test_nakayama_text(capsys):
    code, out, _ = run_cli(capsys, "nakayama", "--input", str(PROBLEMS / "shear.json"))
    assert code == 0
    assert "nu(x) = x + 1" in out
    assert "verified: yes" in out


def test_nakayama_json_structure(capsys):
    code, out, _ = run_cli(
        capsys, "nakayama", "--input", str(PROBLEMS / "q2.json"), "--format", "json"
    )
    doc = json.loads(out)
    assert doc["case"] == "general"
    assert doc["lambda"] == "2"
    assert doc["nu_x"] == "2*x"
    assert doc["verified"] is True


def test_check_cy(capsys):
    code, out, _ = run_cli(capsys, "check-cy", "--input", str(PROBLEMS / "weyl.json"))
    assert code == 0 and "Calabi-Yau: yes" in out
    code, out, _ = run_cli(
        capsys, "check-cy", "--input", str(PROBLEMS / "divergence_free.json")
    )
    assert code == 0 and "Calabi-Yau: yes" in out
    code, out, _ = run_cli(capsys, "check-cy", "--input", str(PROBLEMS / "q2.json"))
    assert code == 0 and "Calabi-Yau: no" in out


def test_order_finite(capsys):
    code, out, _ = run_cli(capsys, "order", "--input", str(PROBLEMS / "qminus1.json"))
    assert code == 0
    assert "order of sigma: 2" in out and "order of nu: 2" in out


def test_order_unreached(capsys):
    code, out, _ = run_cli(capsys, "order", "--input", str(PROBLEMS / "q2.json"))
    assert code == 0
    assert "not reached" in out


def test_kappa_drift_command(capsys):
    code, out, _ = run_cli(
        capsys, "kappa-drift", "--r", "2", "--input", str(PROBLEMS / "shear.json")
    )
    assert code == 0
    assert "= 2" in out


def test_kappa_drift_rejects_differential(capsys):
    code, _, err = run_cli(
        capsys, "kappa-drift", "--r", "1", "--input", str(PROBLEMS / "weyl.json")
    )
    assert code == 2
    assert "sigma != id" in err


def test_verify_resolution_differential(capsys):
    code, out, _ = run_cli(
        capsys, "verify-resolution", "--input", str(PROBLEMS / "divergence_free.json")
    )
    assert code == 0
    assert "all identities hold" in out
    assert "PASS" in out and "FAIL" not in out


def test_verify_resolution_infers_case(capsys, tmp_path):
    doc = {"vars": ["z1", "z2"], "sigma": ["2*z1", "z2"], "delta": ["0", "0"]}
    code, out, _ = run_cli(
        capsys, "verify-resolution", "--input", write_problem(tmp_path, doc)
    )
    assert code == 0
    assert "all identities hold" in out


def test_verify_resolution_rejects_mixed(capsys):
    code, _, err = run_cli(
        capsys, "verify-resolution", "--input", str(PROBLEMS / "q2.json")
    )
    assert code == 2
    assert "trimmed" in err and "differential" in err


def test_eigenspaces_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "eigenspaces",
        "--power", "1",
        "--max-degree", "2",
        "--input", str(PROBLEMS / "q2.json"),
        "--format", "json",
    )
    doc = json.loads(out)
    assert code == 0
    assert doc["eigenvalue"] == "2"
    assert doc["basis"] == ["z1*z2", "z1"]


def test_invariants_command(capsys):
    code, out, _ = run_cli(
        capsys,
        "invariants",
        "--max-xdeg", "2",
        "--max-degree", "2",
        "--input", str(PROBLEMS / "kappa_in_r.json"),
        "--format", "json",
    )
    doc = json.loads(out)
    assert code == 0
    elements = {entry["element"] for entry in doc["invariants"]}
    assert "z1*x + z1" in elements


def test_check_gr_reports_obstruction(capsys):
    code, out, _ = run_cli(
        capsys,
        "check-gr",
        "--level", "1",
        "--max-degree", "1",
        "--input", str(PROBLEMS / "shear.json"),
    )
    assert code == 0  # a certified negative is still a finding
    assert "witness z2*x + z1" in out
    assert "certified NoSolution" in out


def test_check_gr_json_deterministic(capsys):
    args = (
        "check-gr",
        "--level", "1",
        "--max-degree", "1",
        "--input", str(PROBLEMS / "q2.json"),
        "--format", "json",
    )
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["all_witnessed"] is True


def test_bounds_feed_defaults(capsys):
    # qminus1.json carries bounds {max_degree: 2, max_xdeg: 2}
    code, out, _ = run_cli(
        capsys,
        "invariants",
        "--input", str(PROBLEMS / "qminus1.json"),
        "--format", "json",
    )
    doc = json.loads(out)
    assert doc["max_xdeg"] == 2 and doc["max_degree"] == 2
    assert any(entry["element"] == "x^2" for entry in doc["invariants"])


def test_input_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "kappa", "--input", "/does/not/exist.json")
    assert code == 2
    assert "input error" in err


def test_console_script_installed():
    result = subprocess.run(
        [sys.executable, "-m", "orenak.cli", "jacobian", "--input", str(PROBLEMS / "weyl.json")],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "1" in result.stdout
