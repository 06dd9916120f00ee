"""
Curves of states, their quantum velocity and angular speed.

Curves are sampled: t_0 < t_1 < ... < t_N with one StateVector per node. The
velocity is a finite difference (central inside, one-sided at the ends), and the
angular speed is the norm of its component orthogonal to the state. Integrating
the angular speed bounds the angle between the curve's ends; the great-circle arc
between phase-aligned endpoints attains that bound.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np
import pandas as pd
import scipy.integrate

from .hilbert import (
    ArrayLike,
    StateVector,
    _as_vector,
    _check_dims,
    are_identical,
    normalize,
    quantum_angle,
)
from .utils.errors import InputError
from .utils.globals import GLOBALS
from .utils.reports import BoundReport

logger = logging.getLogger(__name__)

__all__ = [
    "BoundReport",
    "Curve",
    "VelocityDecomposition",
    "angular_speed",
    "angular_speeds",
    "arc_length",
    "check_estimate",
    "cumulative_length",
    "curve_from_function",
    "curve_table",
    "decompose_velocity",
    "difference_quotient",
    "geodesic",
    "phase_align",
    "velocity_at",
]

# check_estimate allowance: 1e-8 + ESTIMATE_H2_CONSTANT * h_max^2 * N.
ESTIMATE_H2_CONSTANT = 1.0


@dataclass(frozen=True, eq=False)
class Curve:
    params: np.ndarray
    states: Tuple[StateVector, ...]

    def __post_init__(self) -> None:
        params = np.array(self.params, dtype=float, copy=True)
        states = tuple(self.states)
        if params.ndim != 1 or params.size < 1:
            raise InputError("curve needs at least one node")
        if params.size != len(states):
            raise InputError(f"{params.size} parameters but {len(states)} states")
        if not np.all(np.isfinite(params)):
            raise InputError("curve parameters must be finite")
        if params.size > 1 and not np.all(np.diff(params) > 0):
            raise InputError("curve parameters must be strictly increasing")
        dim = states[0].dim
        if any(s.dim != dim for s in states):
            raise InputError("all curve states must share one dimension")
        params.flags.writeable = False
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "states", states)

    @property
    def n_nodes(self) -> int:
        return int(self.params.size)

    @property
    def dim(self) -> int:
        return self.states[0].dim

    def matrix(self) -> np.ndarray:
        """States stacked as rows, shape (nodes, dim)."""
        return np.stack([s.amplitudes for s in self.states])


@dataclass(frozen=True, eq=False)
class VelocityDecomposition:
    v: np.ndarray
    v_par: np.ndarray
    v_perp: np.ndarray


def _require_two_nodes(c: Curve) -> None:
    if c.n_nodes < 2:
        raise InputError("a single-node curve has no velocity")


def _node(c: Curve, k: int) -> int:
    n = c.n_nodes
    if not -n <= k < n:
        raise InputError(f"node {k} out of range for a curve with {n} nodes")
    return k % n


def curve_from_function(f: Callable[[float], ArrayLike], params: Sequence[float]) -> Curve:
    """Sample f(t) at every parameter, normalizing each node."""
    params = np.asarray(params, dtype=float)
    return Curve(params, tuple(normalize(f(float(t))) for t in params))


def velocity_at(c: Curve, k: int) -> np.ndarray:
    _require_two_nodes(c)
    k = _node(c, k)
    t, r = c.params, c.states
    last = c.n_nodes - 1
    if k == 0:
        lo, hi = 0, 1
    elif k == last:
        lo, hi = last - 1, last
    else:
        lo, hi = k - 1, k + 1
    return (r[hi].amplitudes - r[lo].amplitudes) / (t[hi] - t[lo])


def decompose_velocity(r: ArrayLike, v: ArrayLike) -> VelocityDecomposition:
    """v_par = r <r|v>, v_perp = v - v_par."""
    vr, vv = _as_vector(r), _as_vector(v)
    _check_dims(vr, vv)
    v_par = vr * np.vdot(vr, vv)
    return VelocityDecomposition(v=vv, v_par=v_par, v_perp=vv - v_par)


def angular_speed(c: Curve, k: int) -> float:
    """Norm of the orthogonal velocity component at node k."""
    k = _node(c, k)
    d = decompose_velocity(c.states[k], velocity_at(c, k))
    return float(np.linalg.norm(d.v_perp))


def angular_speeds(c: Curve) -> np.ndarray:
    _require_two_nodes(c)
    return np.array([angular_speed(c, k) for k in range(c.n_nodes)])


def difference_quotient(c: Curve, k: int) -> float:
    """angle(r_{k+1}, r_k) / (t_{k+1} - t_k); backward at the last node."""
    _require_two_nodes(c)
    k = _node(c, k)
    lo, hi = (k, k + 1) if k < c.n_nodes - 1 else (k - 1, k)
    return quantum_angle(c.states[hi], c.states[lo]).radians / (c.params[hi] - c.params[lo])


def _is_uniform(t: np.ndarray) -> bool:
    steps = np.diff(t)
    return bool(np.allclose(steps, steps[0], rtol=1e-9, atol=0.0))


def arc_length(c: Curve) -> float:
    """Integral of the angular speed: Simpson on uniform grids with an even number
    of intervals, trapezoid otherwise."""
    omega = angular_speeds(c)
    t = c.params
    intervals = c.n_nodes - 1
    if intervals % 2 == 0 and _is_uniform(t):
        length = scipy.integrate.simpson(omega, x=t)
    else:
        length = scipy.integrate.trapezoid(omega, x=t)
    return abs(float(length))


def cumulative_length(c: Curve) -> np.ndarray:
    return scipy.integrate.cumulative_trapezoid(angular_speeds(c), x=c.params, initial=0.0)


def check_estimate(c: Curve) -> BoundReport:
    """angle(r(t_N), r(t_0)) <= arc length, with an O(h^2) discretization allowance."""
    _require_two_nodes(c)
    h = float(np.max(np.diff(c.params)))
    intervals = c.n_nodes - 1
    tolerance = 1e-8 + ESTIMATE_H2_CONSTANT * h * h * intervals
    lhs = quantum_angle(c.states[-1], c.states[0]).radians
    rhs = arc_length(c)
    logger.debug(f"estimate: angle {lhs:.12g}, arc {rhs:.12g}, tolerance {tolerance:.3g}")
    return BoundReport.compare(lhs, rhs, tolerance, "angle between ends <= arc length")


def phase_align(r1: ArrayLike, r2: ArrayLike) -> StateVector:
    """e^{i alpha} r2 with <r2'|r1> real and non-negative; r2 untouched if orthogonal."""
    v1, v2 = _as_vector(r1), _as_vector(r2)
    _check_dims(v1, v2)
    overlap = np.vdot(v2, v1)
    if abs(overlap) < GLOBALS.ZERO_TOL:
        return StateVector(v2)
    return StateVector(v2 * (overlap / abs(overlap)))


def geodesic(r1: ArrayLike, r2: ArrayLike, n: int) -> Curve:
    """
    Great-circle arc cos(s) r1 + sin(s) u for s in [0, angle(r1, r2)], n + 1 nodes.

    u is the unit vector of the real plane spanned by r1 and the phase-aligned r2.
    Identical rays give a constant curve over the unit interval (length 0).

    Args:
        r1 (ArrayLike): Start state.
        r2 (ArrayLike): End state; reached up to a phase.
        n (int): Number of intervals.
    """
    v1, v2 = _as_vector(r1), _as_vector(r2)
    _check_dims(v1, v2)
    if n < 1:
        raise InputError(f"geodesic needs at least one interval, got {n}")
    start = StateVector(v1)
    if are_identical(v1, v2):
        logger.debug("geodesic between identical rays: constant curve")
        return Curve(np.linspace(0.0, 1.0, n + 1), (start,) * (n + 1))

    theta = quantum_angle(v1, v2).radians
    aligned = phase_align(v1, v2).amplitudes
    u = aligned - np.cos(theta) * v1
    u = u / np.linalg.norm(u)
    s = np.linspace(0.0, theta, n + 1)
    states: List[StateVector] = [normalize(np.cos(si) * v1 + np.sin(si) * u) for si in s]
    return Curve(s, tuple(states))


def curve_table(c: Curve) -> pd.DataFrame:
    """Columns t, omega, cumulative_length, angle_to_start; one row per node."""
    start = c.states[0]
    if c.n_nodes < 2:
        omega = np.zeros(1)
        cumulative = np.zeros(1)
    else:
        omega = angular_speeds(c)
        cumulative = scipy.integrate.cumulative_trapezoid(omega, x=c.params, initial=0.0)
    return pd.DataFrame(
        {
            "t": c.params,
            "omega": omega,
            "cumulative_length": cumulative,
            "angle_to_start": [quantum_angle(s, start).radians for s in c.states],
        }
    )
