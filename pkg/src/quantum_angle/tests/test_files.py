import json
import logging

import numpy as np
import pytest

from src.quantum_angle.dynamics import random_generator
from src.quantum_angle.hilbert import normalize
from src.quantum_angle.utils.errors import InputError
from src.quantum_angle.utils.files import (
    parse_generator,
    parse_state,
    read_generator,
    read_state,
    render_csv,
    render_json,
    write_generator,
    write_state,
)


def _dump(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


def test_state_file(tmp_path):
    psi = normalize([1, 2j, -1])
    path = str(tmp_path / "psi.json")
    write_state(path, psi)
    assert np.allclose(read_state(path).amplitudes, psi.amplitudes)


def test_state_is_renormalized_with_warning(caplog):
    with caplog.at_level(logging.WARNING):
        psi = parse_state([[0.6, 0.0], [0.8000001, 0.0]])
    assert np.linalg.norm(psi.amplitudes) == pytest.approx(1.0, abs=1e-12)
    assert "renormalizing" in caplog.text


@pytest.mark.parametrize(
    "payload",
    [
        [[1.0, 0.0], [1.0, 0.0]],
        [],
        [[1.0]],
        [["1", 0.0]],
        {"re": 1},
        [[0.0, 0.0]],
    ],
)
def test_bad_state_payloads(payload):
    with pytest.raises(InputError):
        parse_state(payload)


def test_unreadable_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(InputError):
        read_state(str(bad))
    with pytest.raises(InputError):
        read_state(str(tmp_path / "missing.json"))


def test_generator_file(tmp_path):
    g = random_generator(3, 0)
    path = str(tmp_path / "a.json")
    write_generator(path, g)
    assert np.allclose(read_generator(path).matrix, g.matrix)


@pytest.mark.parametrize(
    "payload",
    [
        {"dim": 2, "entries": [[0, 0], [1, 0], [0, 0], [0, 0]]},
        {"dim": 2, "entries": [[1, 0], [0, 0], [0, 0]]},
        {"dim": 0, "entries": []},
        {"entries": [[1, 0]]},
        [[1, 0]],
    ],
)
def test_bad_generator_payloads(tmp_path, payload):
    with pytest.raises(InputError):
        read_generator(_dump(tmp_path, "g.json", payload))


def test_generator_with_complex_entries():
    g = parse_generator({"dim": 2, "entries": [[1, 0], [0, -1], [0, 1], [2, 0]]})
    assert g.matrix[0, 1] == -1j
    assert np.allclose(g.eigenvalues, np.linalg.eigvalsh(g.matrix))


def test_render_json_is_canonical():
    assert render_json({"b": 1, "a": [1.5, None]}) == render_json({"a": [1.5, None], "b": 1})
    with pytest.raises(ValueError):
        render_json({"x": float("nan")})


def test_render_csv():
    text = render_csv([{"deltas": 0.0, "angle": 0.0}, {"deltas": 1.0, "angle": 0.5}], ["deltas", "angle"])
    assert text.splitlines() == ["deltas,angle", "0.0,0.0", "1.0,0.5"]
