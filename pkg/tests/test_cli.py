import json
import subprocess
import sys

import pytest

from primex.cli import main

V4_GENS = "1 0 3 2;2 3 0 1"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    result = json.loads(out)
    assert code == (0 if result["status"] == "ok" else 1)
    return result, out


def test_group_info_a4(capsys, data_dir):
    result, _ = run(capsys, "group", "info", str(data_dir / "a4.grp"))
    p = result["payload"]
    assert (p["order"], p["transitive"], p["primitive"], p["solvable"]) == (12, True, True, True)
    assert p["derived_length"] == 2
    assert p["stabilizer_maximal"] is True


def test_group_info_c4(capsys, data_dir):
    p = run(capsys, "group", "info", str(data_dir / "c4.grp"))[0]["payload"]
    assert (p["order"], p["primitive"]) == (4, False)


def test_group_info_degree_one(capsys, data_dir):
    p = run(capsys, "group", "info", str(data_dir / "trivial1.grp"))[0]["payload"]
    assert p["primitive"] is None


def test_parse_error(capsys, data_dir):
    result, _ = run(capsys, "group", "info", str(data_dir / "malformed.grp"))
    assert result["status"] == "error"
    assert result["error"]["code"] == "PARSE"
    assert "line 3" in result["error"]["message"]


def test_affine_s4(capsys, data_dir):
    p = run(capsys, "group", "affine", str(data_dir / "s4.grp"))[0]["payload"]
    assert (p["l"], p["n"]) == (2, 2)
    assert len(p["generators"]) == 2


@pytest.mark.parametrize("name, reason", [("s5.grp", "not-solvable"), ("c4.grp", "not-primitive")])
def test_affine_preconditions(capsys, data_dir, name, reason):
    result, _ = run(capsys, "group", "affine", str(data_dir / name))
    assert result["error"] == {"code": "PRECONDITION", "message": reason}


def test_cohom_s4_v4(capsys, data_dir):
    p = run(capsys, "cohom", str(data_dir / "s4.grp"), "--normal", V4_GENS)[0]["payload"]
    assert (p["h0"], p["h1"], p["h2"]) == (0, 0, 0)


def test_cohom_gl_subgroup(capsys):
    gl_json = json.dumps({"l": 2, "n": 2, "matrices": [[[0, 1], [1, 1]], [[0, 1], [1, 0]]]})
    p = run(capsys, "cohom", "--gl-subgroup", gl_json)[0]["payload"]
    assert p["order"] == 6
    assert (p["h1"], p["h2"], p["simple"], p["faithful"]) == (0, 0, True, True)


def test_cohom_usage(capsys, data_dir):
    result, _ = run(capsys, "cohom", str(data_dir / "s4.grp"))
    assert result["error"]["code"] == "USAGE"


def test_cohom_not_normal(capsys, data_dir):
    result, _ = run(capsys, "cohom", str(data_dir / "s4.grp"), "--normal", "1 0 2 3")
    assert result["error"]["code"] == "PRECONDITION"


def test_complements_s4_v4(capsys, data_dir):
    p = run(capsys, "ext", "complements", str(data_dir / "s4.grp"), "--normal", V4_GENS)[0]["payload"]
    assert (p["count"], p["classes"], p["split"]) == (4, 1, True)
    assert p["cocycle_count"] == 4


def test_enumerate_writes_files(capsys, tmp_path):
    p = run(capsys, "enumerate", "--l", "2", "--n", "2", "--out", str(tmp_path))[0]["payload"]
    assert p["count"] == 2
    assert [e["order"] for e in p["entries"]] == [12, 24]
    assert sorted(f.name for f in tmp_path.iterdir()) == ["group_2_2_00.grp", "group_2_2_01.grp", "manifest.json"]


def test_enumerate_guard(capsys):
    result, _ = run(capsys, "enumerate", "--l", "5", "--n", "2")
    assert result["error"]["code"] == "GUARD"
    assert result["error"]["limit"] == 200


def test_quartic_classify(capsys):
    p = run(capsys, "quartic", "classify", "--coeffs=0,0,-2,2")[0]["payload"]
    assert p["verdict"] == "S4"
    assert p["polynomial"] == "x^4-2x+2"
    assert p["discriminant"] == "1616"


def test_quartic_parse_error(capsys):
    result, _ = run(capsys, "quartic", "classify", "--coeffs", "1,2")
    assert result["error"]["code"] == "PARSE"


def test_quartic_precision_error(capsys):
    result, _ = run(capsys, "quartic", "classify", "--coeffs=2,2,0,2", "--precision", "9")
    assert result["error"]["code"] == "PRECISION"


def test_quartic_scan(capsys, monkeypatch):
    monkeypatch.setenv("PRIMEX_THREADS", "1")
    p = run(capsys, "quartic", "scan", "--mod-bits", "2")[0]["payload"]
    assert p["tally"] == {"A4": 16, "IMPRIMITIVE": 40, "S4": 72}


def test_output_is_byte_identical(capsys, data_dir):
    argv = ["ext", "complements", str(data_dir / "s4.grp"), "--normal", V4_GENS]
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second
    assert list(json.loads(first)) == sorted(json.loads(first))


def test_timing_flag(capsys, data_dir):
    result, _ = run(capsys, "--timing", "group", "info", str(data_dir / "s4.grp"))
    assert result["elapsed_ms"] >= 0
    assert "elapsed_ms" not in result["payload"]


def test_console_script(data_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "primex.cli", "group", "info", str(data_dir / "s5.grp")],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["solvable"] is False
    bad = subprocess.run(
        [sys.executable, "-m", "primex.cli", "group", "affine", str(data_dir / "s5.grp")],
        capture_output=True, text=True, check=False,
    )
    assert bad.returncode == 1
