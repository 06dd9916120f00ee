"""The qangle command line, driven through main(argv)."""

import json
import math

import pytest

from src.quantum_angle.cli import main
from src.quantum_angle.utils.files import read_state


@pytest.fixture(autouse=True)
def _plain_settings(monkeypatch):
    monkeypatch.setenv("QANGLE_HBAR", "1.0")
    monkeypatch.setenv("QANGLE_SEED", "0")
    monkeypatch.setenv("QANGLE_FORMAT", "json")
    monkeypatch.setenv("QANGLE_LOG_LEVEL", "WARNING")


def _write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def two_level_files(tmp_path):
    s = 1 / math.sqrt(2)
    return (
        _write(tmp_path, "a.json", {"dim": 2, "entries": [[1, 0], [0, 0], [0, 0], [-1, 0]]}),
        _write(tmp_path, "psi.json", [[s, 0], [s, 0]]),
    )


@pytest.mark.parametrize(
    "a, b, angle, substantial",
    [
        ([[1, 0], [0, 0]], [[0, 0], [1, 0]], math.pi / 2, True),
        ([[1, 0], [0, 0]], [[1, 0], [0, 0]], 0.0, False),
        ([[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]], 0.927295, False),
    ],
)
def test_angle(tmp_path, capsys, a, b, angle, substantial):
    code, out, _ = _run(capsys, "angle", _write(tmp_path, "a.json", a), _write(tmp_path, "b.json", b))
    payload = json.loads(out)
    assert code == 0
    assert payload["angle_radians"] == pytest.approx(angle, abs=1e-6)
    assert payload["substantial"] is substantial


def test_angle_dimension_mismatch(tmp_path, capsys):
    code, _, err = _run(
        capsys, "angle", _write(tmp_path, "a.json", [[1, 0], [0, 0]]), _write(tmp_path, "b.json", [[1, 0], [0, 0], [0, 0]])
    )
    assert code == 2
    assert err.startswith("error:")


def test_missing_file(tmp_path, capsys):
    code, _, err = _run(capsys, "angle", str(tmp_path / "nope.json"), str(tmp_path / "nope.json"))
    assert code == 2
    assert "error:" in err


def test_evolve_writes_a_state_file(tmp_path, capsys, two_level_files):
    out = str(tmp_path / "out" / "evolved.json")
    code, _, _ = _run(capsys, "evolve", *two_level_files, "0.5", "--out", out)
    assert code == 0
    assert read_state(out).dim == 2


def test_profile_rows(capsys, two_level_files):
    code, out, _ = _run(capsys, "profile", *two_level_files, "--stop", "3", "--steps", "30")
    rows = json.loads(out)
    assert code == 0
    assert len(rows) == 31
    assert all(r["holds"] for r in rows)
    for r in rows:
        assert r["bound"] == pytest.approx(abs(r["deltas"]))
        assert r["angle"] <= math.pi / 2 + 1e-12
        if r["deltas"] <= 1.5:
            assert r["angle"] == pytest.approx(r["deltas"], abs=1e-7)


def test_profile_of_eigenvector_as_csv(tmp_path, capsys, two_level_files):
    eigen = _write(tmp_path, "e.json", [[1, 0], [0, 0]])
    code, out, _ = _run(capsys, "profile", two_level_files[0], eigen, "--format", "csv", "--steps", "10")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "deltas,angle,bound,holds"
    assert all(abs(float(line.split(",")[1])) < 1e-7 for line in lines[1:])


def test_non_hermitian_generator(tmp_path, capsys, two_level_files):
    bad = _write(tmp_path, "bad.json", {"dim": 2, "entries": [[0, 0], [1, 0], [0, 0], [0, 0]]})
    code, _, err = _run(capsys, "profile", bad, two_level_files[1])
    assert code == 2
    assert "Hermitian" in err


def test_verdict(capsys, two_level_files):
    code, out, _ = _run(capsys, "verdict", *two_level_files, "1.2")
    report = json.loads(out)
    assert code == 0
    assert report["applicable"] and report["holds"]
    assert report["rhs"] == pytest.approx(1.2)


def test_geodesic(tmp_path, capsys):
    a = _write(tmp_path, "a.json", [[1, 0], [0, 0]])
    b = _write(tmp_path, "b.json", [[0, 0], [0, 1]])
    code, out, _ = _run(capsys, "geodesic", a, b, "--nodes", "200")
    payload = json.loads(out)
    assert code == 0
    assert payload["arc_length"] == pytest.approx(math.pi / 2, abs=1e-4)
    assert len(payload["nodes"]) == 201


def test_demo_two_level(capsys):
    code, out, _ = _run(capsys, "demo", "two-level")
    record = json.loads(out)
    assert code == 0
    assert record["demo"] == "two-level"
    assert record["product"] == pytest.approx(1.0, abs=1e-9)
    assert record["holds"] is True


def test_demo_circle(capsys):
    code, out, _ = _run(capsys, "demo", "circle", "--modes", "0,1")
    record = json.loads(out)
    assert code == 0
    assert record["delta_star"] == pytest.approx(2.0, abs=1e-6)


def test_demo_lifetime(capsys):
    code, out, _ = _run(capsys, "demo", "lifetime", "--profile", "gaussian")
    assert code == 0
    assert json.loads(out)["product"] == pytest.approx(1.1096, abs=1e-2)


def test_demo_csv(capsys):
    code, out, _ = _run(capsys, "demo", "two-level", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines[0] == "demo,delta_star,std_dev,product,holds"
    assert lines[1].startswith("two-level,")


def test_demo_is_deterministic(capsys):
    first = _run(capsys, "demo", "multi-axis")[1]
    second = _run(capsys, "demo", "multi-axis")[1]
    assert first == second


def test_unknown_demo(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["demo", "torus"])
    assert exc.value.code == 2
    assert "two-level" in capsys.readouterr().err


def test_guard_violation_exit_code(capsys):
    code, _, err = _run(capsys, "demo", "line", "--sigma", "0.01")
    assert code == 3
    assert "under-resolved" in err


def test_hbar_flag_and_environment(capsys, monkeypatch):
    monkeypatch.setenv("QANGLE_HBAR", "2.0")
    record = json.loads(_run(capsys, "demo", "two-level")[1])
    assert record["parameters"]["hbar"] == 2.0
    record = json.loads(_run(capsys, "demo", "two-level", "--hbar", "0.5")[1])
    assert record["parameters"]["hbar"] == 0.5
    assert record["product"] == pytest.approx(1.0, abs=1e-9)


def test_bad_hbar(capsys):
    code, _, err = _run(capsys, "demo", "two-level", "--hbar", "-1")
    assert code == 2
    assert "hbar" in err


def test_sweep(capsys):
    code, out, _ = _run(capsys, "sweep", "--trials", "300", "--seed", "4")
    payload = json.loads(out)
    assert code == 0
    assert payload["counterexamples"] == 0
    assert payload["seed"] == 4


def test_demo_rotation_axes(capsys):
    code, out, _ = _run(capsys, "demo", "rotation-axes", "--spin", "1", "--rotation", "1.5,1.5,0")
    record = json.loads(out)
    assert code == 0
    assert record["demo"] == "rotation-axes"
    assert record["std_dev"] == pytest.approx(1.5, abs=1e-12)
    assert record["report"]["applicable"] is True
    assert record["product"] >= 1.0


def test_demo_rotation_axes_rejects_bad_spin(capsys):
    code, _, err = _run(capsys, "demo", "rotation-axes", "--spin", "0.7")
    assert code == 2
    assert "half-integer" in err
