"""
State and generator files, and the writers for command output.

State file: JSON array of [re, im] pairs, e.g. [[1.0, 0.0], [0.0, 0.0]].
Generator file: JSON object {"dim": n, "entries": [[re, im], ...]} in row-major order.
"""

from __future__ import annotations

import io
import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

from ..dynamics import HermitianGenerator
from ..hilbert import StateVector
from .errors import InputError
from .globals import GLOBALS

logger = logging.getLogger(__name__)


def _read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except (OSError, ValueError) as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _pairs_to_complex(pairs: Any, what: str) -> np.ndarray:
    if not isinstance(pairs, list) or not pairs:
        raise InputError(f"{what} must be a non-empty list of [re, im] pairs")
    out = np.empty(len(pairs), dtype=np.complex128)
    for i, p in enumerate(pairs):
        if not (isinstance(p, list) and len(p) == 2 and all(isinstance(x, (int, float)) for x in p)):
            raise InputError(f"{what}: entry {i} is not an [re, im] pair: {p!r}")
        out[i] = complex(p[0], p[1])
    if not np.all(np.isfinite(out)):
        raise InputError(f"{what} has non-finite entries")
    return out


def _complex_to_pairs(values: np.ndarray) -> List[List[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values, dtype=np.complex128).ravel()]


def state_to_pairs(state: StateVector) -> List[List[float]]:
    return _complex_to_pairs(np.asarray(state))


def parse_state(data: Any, source: str = "state") -> StateVector:
    """Build a StateVector from parsed JSON, renormalizing small norm drift."""
    amps = _pairs_to_complex(data, source)
    norm = float(np.linalg.norm(amps))
    if abs(norm - 1.0) > GLOBALS.FILE_NORM_TOL:
        raise InputError(f"{source}: norm {norm:.9g} is not within {GLOBALS.FILE_NORM_TOL} of 1")
    if abs(norm - 1.0) > GLOBALS.NORM_TOL:
        logger.warning(f"{source}: renormalizing (norm {norm:.12g})")
    return StateVector(amps / norm)


def read_state(path: str) -> StateVector:
    return parse_state(_read_json(path), path)


def write_state(path: str, state: StateVector) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(state_to_pairs(state), f, indent=2)


def parse_generator(data: Any, source: str = "generator") -> HermitianGenerator:
    if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
        raise InputError(f"{source}: expected an object with 'dim' and 'entries'")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise InputError(f"{source}: dim must be a positive integer, got {dim!r}")
    entries = _pairs_to_complex(data["entries"], source)
    if entries.size != dim * dim:
        raise InputError(f"{source}: {entries.size} entries for dim {dim}")
    return HermitianGenerator(entries.reshape(dim, dim))


def read_generator(path: str) -> HermitianGenerator:
    return parse_generator(_read_json(path), path)


def write_generator(path: str, generator: HermitianGenerator) -> None:
    m = np.asarray(generator.matrix)
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"dim": int(m.shape[0]), "entries": _complex_to_pairs(m)}, f, indent=2)


def render_json(payload: Any) -> str:
    """Canonical JSON: sorted keys, two-space indent, so equal runs give equal bytes."""
    return json.dumps(payload, indent=2, sort_keys=True, allow_nan=False)


def render_csv(rows: Sequence[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    frame = pd.DataFrame(list(rows), columns=list(columns) if columns else None)
    buf = io.StringIO()
    frame.to_csv(buf, index=False, lineterminator="\n")
    return buf.getvalue()


def emit(text: str, out: Optional[str] = None) -> None:
    """Write to `out` (creating its directory) or to stdout."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        print(text, end="")
        return
    parent = os.path.dirname(os.path.abspath(out))
    os.makedirs(parent, exist_ok=True)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)
    logger.debug(f"wrote {out}")
