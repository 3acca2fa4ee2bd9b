import json
import subprocess
import sys

import pytest

from sgq import BlockProfile, SuperMatrix, SuperRing, SuperShape
from sgq.cli import main
from sgq.flag import NCoordinates
from sgq.sampling import random_big_cell, trial_rng
from sgq.serialize import (
    canonical_dumps,
    encode_matrix,
    encode_ncoords,
    encode_presentation,
    encode_rational_point,
)
from sgq.smoothness import Presentation, RationalPoint


@pytest.fixture
def ring():
    return SuperRing([], ["t1", "t2"])


@pytest.fixture
def small_matrix_doc(ring, tmp_path):
    matrix = SuperMatrix(ring, SuperShape((1, 1), (1, 1)),
                         [[ring.one(), ring.gen("t1")], [ring.gen("t2"), ring.one()]])
    path = tmp_path / "g.json"
    path.write_text(canonical_dumps(encode_matrix(matrix)))
    return path


def run_cli(*argv):
    return main(list(argv))


def read(path):
    return json.loads(path.read_text())


def test_factor_command(small_matrix_doc, tmp_path, ring):
    out = tmp_path / "factored.json"
    code = run_cli("factor", "--in", str(small_matrix_doc), "--out", str(out), "--profile", "1,1,1,0")
    assert code == 0
    doc = read(out)
    assert doc["ok"] and doc["command"] == "factor"
    xi_entry = doc["n"]["xi"]["entries"][0][0]
    assert xi_entry["terms"] == [{"coeff": {"re": "1", "im": "0"}, "exp": [], "odd": [1]}]
    p_lower_left = doc["p"]["entries"][1][0]
    assert p_lower_left["terms"] == []


def test_ber_command(small_matrix_doc, tmp_path):
    out = tmp_path / "ber.json"
    assert run_cli("ber", "--in", str(small_matrix_doc), "--out", str(out)) == 0
    doc = read(out)
    # Ber = 1 - t1*t2
    assert doc["result"]["terms"] == [
        {"coeff": {"re": "1", "im": "0"}, "exp": [], "odd": []},
        {"coeff": {"re": "-1", "im": "0"}, "exp": [], "odd": [0, 1]},
    ]


def test_minv_command(small_matrix_doc, tmp_path, ring):
    out = tmp_path / "inv.json"
    assert run_cli("minv", "--in", str(small_matrix_doc), "--out", str(out)) == 0
    from sgq.serialize import parse_matrix

    inverse = parse_matrix(read(out)["result"])
    original = parse_matrix(read(small_matrix_doc))
    assert original * inverse == SuperMatrix.identity(ring, 1, 1)


def test_coset_eq_command(small_matrix_doc, tmp_path):
    out = tmp_path / "eq.json"
    code = run_cli("coset-eq", "--in", str(small_matrix_doc), "--in2", str(small_matrix_doc),
                   "--out", str(out), "--profile", "1,1,1,0")
    assert code == 0 and read(out)["equal"] is True


def test_orbit_and_chart_roundtrip(ring, tmp_path):
    bp = BlockProfile(1, 1, 1, 0)
    coords = NCoordinates(
        bp,
        SuperMatrix.zeros(ring, SuperShape((0, 0), (1, 0))),
        SuperMatrix.zeros(ring, SuperShape((0, 0), (0, 0))),
        SuperMatrix(ring, SuperShape((0, 1), (1, 0)), [[ring.gen("t2")]]),
        SuperMatrix.zeros(ring, SuperShape((0, 1), (0, 0))),
    )
    nc_path = tmp_path / "nc.json"
    nc_path.write_text(canonical_dumps(encode_ncoords(coords)))
    up_path = tmp_path / "up.json"
    assert run_cli("chart-up", "--in", str(nc_path), "--out", str(up_path), "--profile", "1,1,1,0") == 0
    point_doc = read(up_path)["result"]
    point_path = tmp_path / "pt.json"
    point_path.write_text(canonical_dumps(point_doc))
    down_path = tmp_path / "down.json"
    assert run_cli("chart-down", "--in", str(point_path), "--out", str(down_path), "--profile", "1,1,1,0") == 0
    assert read(down_path)["result"] == read(nc_path)


def test_smooth_command(tmp_path):
    ring = SuperRing(["x"], ["s1", "s2"])
    pres = Presentation(SuperRing(), ["x"], ["s1", "s2"],
                        [ring.gen("x") ** 2 - ring.one() + ring.gen("s1") * ring.gen("s2")], [])
    pres_path = tmp_path / "pres.json"
    pres_path.write_text(canonical_dumps(encode_presentation(pres)))
    pt_path = tmp_path / "pt.json"
    pt_path.write_text(canonical_dumps(encode_rational_point(RationalPoint({"x": 1}))))
    out = tmp_path / "verdict.json"
    assert run_cli("smooth", "--in", str(pres_path), "--in2", str(pt_path), "--out", str(out)) == 0
    doc = read(out)
    assert doc["smooth"] is True
    assert doc["relative_dimension"] == [0, 2]
    assert doc["etale"] is False


def test_domain_error_exit_code(ring, tmp_path):
    # singular body: factor must fail with a named domain error
    matrix = SuperMatrix(ring, SuperShape((1, 1), (1, 1)),
                         [[ring.zero(), ring.gen("t1")], [ring.gen("t2"), ring.one()]])
    path = tmp_path / "singular.json"
    path.write_text(canonical_dumps(encode_matrix(matrix)))
    out = tmp_path / "err.json"
    code = run_cli("factor", "--in", str(path), "--out", str(out), "--profile", "1,1,1,0")
    assert code == 1
    doc = read(out)
    assert doc["ok"] is False
    assert doc["error"]["name"] == "NotInBigCell"


def test_malformed_json_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    assert run_cli("ber", "--in", str(path)) == 2
    assert "not valid JSON" in capsys.readouterr().err


def test_missing_file_exit_code(tmp_path, capsys):
    assert run_cli("ber", "--in", str(tmp_path / "absent.json")) == 2
    assert "cannot read" in capsys.readouterr().err


def test_schema_violation_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"shape": {"rows": [1, 0]}, "entries": []}))
    assert run_cli("ber", "--in", str(path)) == 2


def test_missing_profile_is_malformed(small_matrix_doc, capsys):
    assert run_cli("factor", "--in", str(small_matrix_doc)) == 2
    assert "--profile" in capsys.readouterr().err


def test_unknown_suite_is_domain_error(tmp_path):
    out = tmp_path / "report.json"
    code = run_cli("proptest", "--suite", "nonsense", "--trials", "1", "--seed", "0", "--out", str(out))
    assert code == 1
    assert read(out)["error"]["name"] == "UnknownSuite"


def test_proptest_zero_trials(tmp_path):
    out = tmp_path / "report.json"
    code = run_cli("proptest", "--suite", "factorization", "--trials", "0", "--seed", "1", "--out", str(out))
    assert code == 0
    doc = read(out)
    assert doc["passed"] is True
    assert all(p["trials"] == 0 for p in doc["properties"])


def test_proptest_deterministic_bytes(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    argv_tail = ["--suite", "kernel", "--trials", "25", "--seed", "42", "--size", "2,2,1,1,4"]
    assert run_cli("proptest", "--out", str(first), *argv_tail) == 0
    assert run_cli("proptest", "--out", str(second), *argv_tail) == 0
    assert first.read_bytes() == second.read_bytes()


def test_matrix_suite_seeded_run(tmp_path):
    out = tmp_path / "report.json"
    code = run_cli("proptest", "--suite", "matrix", "--trials", "10", "--seed", "42",
                   "--size", "2,2,1,1,4", "--out", str(out))
    assert code == 0
    doc = read(out)
    assert doc["passed"] is True
    ber = [p for p in doc["properties"] if p["name"] == "matrix.ber_multiplicative"]
    assert ber and ber[0]["failures"] == 0


def test_module_entry_point(small_matrix_doc):
    result = subprocess.run(
        [sys.executable, "-m", "sgq", "ber", "--in", str(small_matrix_doc)],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["ok"] is True
