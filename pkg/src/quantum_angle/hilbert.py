"""
State vectors and the quantum angle between them.

The quantum angle of two unit vectors is arccos |<a|b>|. It ignores global phase,
so it is a metric on rays (physical states), ranging from 0 (same state) to pi/2
(orthogonal, completely different states). States at least one radian apart
"differ substantially".

The triangle inequality is checked the constructive way: any triple is brought to
the canonical form a = (1, 0, 0), b = (b1, z, b3), c = (c1, c2, 0) inside C^3, and
the auxiliary b' = (b1, |z|, b3) reduces the complex case to the real sphere.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
import scipy.linalg

from .utils.errors import InputError
from .utils.globals import GLOBALS
from .utils.reports import BoundReport

logger = logging.getLogger(__name__)

ArrayLike = Union["StateVector", Sequence[complex], np.ndarray]
SeedLike = Union[int, np.random.Generator, None]

SUBSTANTIAL_ANGLE = GLOBALS.SUBSTANTIAL_ANGLE
RIGHT_ANGLE = GLOBALS.RIGHT_ANGLE


def _as_vector(v: ArrayLike) -> np.ndarray:
    if isinstance(v, StateVector):
        return v.amplitudes
    arr = np.asarray(v, dtype=np.complex128)
    if arr.ndim != 1:
        raise InputError(f"expected a 1-D vector, got shape {arr.shape}")
    return arr


def _check_dims(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise InputError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")


def _phase(x: complex) -> complex:
    """Unit phase of x; 1 for (numerically) zero entries."""
    mag = abs(x)
    if mag < GLOBALS.ZERO_TOL:
        return 1.0 + 0.0j
    return x / mag


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm complex amplitude vector. Read-only once built."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if arr.ndim != 1 or arr.size < 1:
            raise InputError(f"state must be a non-empty 1-D vector, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise InputError("state has non-finite amplitudes")
        norm = np.linalg.norm(arr)
        if abs(norm - 1.0) > GLOBALS.NORM_TOL:
            raise InputError(f"state is not normalized (norm {norm!r}); use normalize()")
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def __array__(self, dtype=None, copy=None) -> np.ndarray:
        if dtype is None:
            return self.amplitudes
        return self.amplitudes.astype(dtype)

    def __len__(self) -> int:
        return self.dim

    def with_phase(self, theta: float) -> "StateVector":
        return StateVector(np.exp(1j * theta) * self.amplitudes)


@dataclass(frozen=True)
class QuantumAngle:
    radians: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.radians <= RIGHT_ANGLE:
            raise InputError(f"quantum angle {self.radians!r} outside [0, pi/2]")

    def __float__(self) -> float:
        return self.radians

    @property
    def substantial(self) -> bool:
        return self.radians >= SUBSTANTIAL_ANGLE


@dataclass(frozen=True)
class CanonicalTriple:
    """a = (1,0,0), b = (b1, z, b3), c = (c1, c2, 0) with b1, b3, c1, c2 >= 0."""

    a: StateVector
    b: StateVector
    c: StateVector
    b1: float
    b3: float
    c1: float
    c2: float
    z: complex


def inner(a: ArrayLike, b: ArrayLike) -> complex:
    """<a|b>, antilinear in the first argument."""
    va, vb = _as_vector(a), _as_vector(b)
    _check_dims(va, vb)
    return complex(np.vdot(va, vb))


def normalize(v: ArrayLike) -> StateVector:
    arr = _as_vector(v)
    if arr.size < 1:
        raise InputError("state must have at least one component")
    if not np.all(np.isfinite(arr)):
        raise InputError("state has non-finite amplitudes")
    norm = np.linalg.norm(arr)
    if norm == 0.0:
        raise InputError("zero state has no direction")
    return StateVector(arr / norm)


def _overlap(va: np.ndarray, vb: np.ndarray) -> float:
    # Both orders are evaluated so the angle is exactly symmetric.
    m = min(abs(np.vdot(va, vb)), abs(np.vdot(vb, va)))
    if m > 1.0 + GLOBALS.CLAMP_TOL:
        logger.debug(f"overlap {m:.17g} exceeds 1 beyond clamp tolerance")
    return float(min(1.0, m))


def quantum_angle(a: ArrayLike, b: ArrayLike) -> QuantumAngle:
    """arccos |<a|b>| for unit vectors, clamped into [0, pi/2]."""
    va, vb = _as_vector(a), _as_vector(b)
    _check_dims(va, vb)
    return QuantumAngle(float(np.arccos(_overlap(va, vb))))


def angle_between(u: ArrayLike, v: ArrayLike) -> QuantumAngle:
    """Quantum angle of two arbitrary non-zero vectors (the unnormalized definition)."""
    va, vb = _as_vector(u), _as_vector(v)
    _check_dims(va, vb)
    nu, nv = np.linalg.norm(va), np.linalg.norm(vb)
    if nu == 0.0 or nv == 0.0:
        raise InputError("zero state has no direction")
    return QuantumAngle(float(np.arccos(_overlap(va / nu, vb / nv))))


def differ_substantially(a: ArrayLike, b: ArrayLike) -> bool:
    return quantum_angle(a, b).radians >= SUBSTANTIAL_ANGLE


def are_identical(a: ArrayLike, b: ArrayLike, tol: float = GLOBALS.NORM_TOL) -> bool:
    """Same physical state: the vectors differ only by a phase factor."""
    va, vb = _as_vector(a), _as_vector(b)
    _check_dims(va, vb)
    return bool(np.linalg.norm(vb - va * np.vdot(va, vb)) < tol)


def are_orthogonal(a: ArrayLike, b: ArrayLike, tol: float = GLOBALS.NORM_TOL) -> bool:
    va, vb = _as_vector(a), _as_vector(b)
    _check_dims(va, vb)
    return bool(abs(np.vdot(va, vb)) < tol)


def triangle_slack(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> float:
    """angle(a,b) + angle(b,c) - angle(a,c); never below zero beyond roundoff."""
    return (
        quantum_angle(a, b).radians
        + quantum_angle(b, c).radians
        - quantum_angle(a, c).radians
    )


def canonicalize_triple(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> CanonicalTriple:
    """
    Bring three states into the canonical form inside C^3.

    Gram-Schmidt runs over (a, c, b): a is the first basis vector, the part of c
    orthogonal to a the second, the remainder of b the third. Phases of c and b,
    and of the second basis vector, are then fixed so that c1, c2, b1 and b3 come
    out real and non-negative. A missing basis vector (span below three) leaves a
    zero coordinate.
    """
    va, vb, vc = _as_vector(a), _as_vector(b), _as_vector(c)
    _check_dims(va, vb)
    _check_dims(va, vc)
    e1 = va / np.linalg.norm(va)

    ac = np.vdot(e1, vc)
    rest_c = vc - e1 * ac
    norm_c = np.linalg.norm(rest_c)
    e2: Optional[np.ndarray] = rest_c / norm_c if norm_c > GLOBALS.ZERO_TOL else None

    # c -> c * conj(phase(c1)) makes c1 real; rotating e2 then makes c2 real.
    c_phase = np.conj(_phase(ac))
    c1 = abs(ac)
    c2_raw = c_phase * (np.vdot(e2, vc) if e2 is not None else 0.0)
    e2_phase = _phase(c2_raw)
    c2 = abs(c2_raw)

    ab = np.vdot(e1, vb)
    b_e2 = np.vdot(e2, vb) if e2 is not None else 0.0
    rest_b = vb - e1 * ab - (e2 * b_e2 if e2 is not None else 0.0)
    b_phase = np.conj(_phase(ab))
    b1 = abs(ab)
    z = complex(b_phase * np.conj(e2_phase) * b_e2)
    b3 = float(np.linalg.norm(rest_b))

    logger.debug(f"canonical triple: b1={b1:.6g} z={z} b3={b3:.6g} c1={c1:.6g} c2={c2:.6g}")
    return CanonicalTriple(
        a=StateVector(np.array([1.0, 0.0, 0.0], dtype=np.complex128)),
        b=normalize([b1, z, b3]),
        c=normalize([c1, c2, 0.0]),
        b1=float(b1),
        b3=b3,
        c1=float(c1),
        c2=float(c2),
        z=z,
    )


def auxiliary_b_prime(t: CanonicalTriple) -> StateVector:
    """b' = (b1, |z|, b3): same angle to a, never further from c than b."""
    return normalize([t.b1, abs(t.z), t.b3])


def check_triangle_via_canonical(a: ArrayLike, b: ArrayLike, c: ArrayLike) -> BoundReport:
    """Run the chain angle(a,c) <= angle(a,b') + angle(b',c) <= angle(a,b) + angle(b,c)."""
    t = canonicalize_triple(a, b, c)
    bp = auxiliary_b_prime(t)
    ac = quantum_angle(t.a, t.c).radians
    ab = quantum_angle(t.a, t.b).radians
    bc = quantum_angle(t.b, t.c).radians
    abp = quantum_angle(t.a, bp).radians
    bpc = quantum_angle(bp, t.c).radians
    return BoundReport.compare(
        lhs=ac,
        rhs=ab + bc,
        tolerance=GLOBALS.NORM_TOL,
        context="triangle inequality",
        real_sphere_rhs=abp + bpc,
        b_prime_lemma=bpc <= bc + GLOBALS.NORM_TOL,
    )


def random_state(dim: int, seed: SeedLike = None) -> StateVector:
    """Unitarily invariant random state: complex Gaussian components, normalized.

    `seed` may be an int or an existing numpy Generator (which is advanced).
    """
    if dim < 1:
        raise InputError(f"dimension must be positive, got {dim}")
    rng = np.random.default_rng(seed)
    return normalize(rng.standard_normal(dim) + 1j * rng.standard_normal(dim))


def random_unitary(dim: int, seed: SeedLike = None) -> np.ndarray:
    """Haar unitary from the QR decomposition of a complex Gaussian matrix."""
    if dim < 1:
        raise InputError(f"dimension must be positive, got {dim}")
    rng = np.random.default_rng(seed)
    g = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = scipy.linalg.qr(g)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
