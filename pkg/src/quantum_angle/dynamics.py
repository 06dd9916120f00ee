"""
One-parameter unitary groups U(ds) = exp(-i ds A / hbar) and the certainty principle.

Along the orbit of its own group the mean and the standard deviation of A stay
fixed, and the orbit moves with constant angular speed dA / hbar. Integrating that
speed bounds the angle the state can turn through, which gives the certainty
principle: a state changes substantially (angle >= 1) only if |ds| dA >= hbar.

Propagation uses the dense Hermitian eigendecomposition of the generator; overlaps
with the initial state are evaluated directly from the spectral weights.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg
import scipy.optimize

from .hilbert import (
    ArrayLike,
    SeedLike,
    StateVector,
    _as_vector,
    differ_substantially,
    quantum_angle,
    random_state,
)
from .kinematics import Curve
from .utils.errors import InputError
from .utils.globals import GLOBALS
from .utils.reports import BoundReport

logger = logging.getLogger(__name__)


class HermitianGenerator:
    """
    Self-adjoint matrix with its spectral decomposition computed at construction.

    `spectrum` may pass a known (eigenvalues, eigenvectors) pair, e.g. a Fourier
    basis; it is then checked against the matrix with a random trial vector
    instead of being recomputed.
    """

    def __init__(
        self,
        matrix: ArrayLike,
        spectrum: Optional[Tuple[np.ndarray, np.ndarray]] = None,
    ) -> None:
        a = np.array(matrix, dtype=np.complex128, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise InputError(f"generator must be a non-empty square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise InputError("generator has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(a))))
        skew = float(np.max(np.abs(a - a.conj().T)))
        if skew > GLOBALS.HERMITIAN_TOL * scale:
            raise InputError(f"generator is not Hermitian (max |A - A^H| = {skew:.3g})")

        if spectrum is None:
            eigenvalues, eigenvectors = scipy.linalg.eigh(a)
            residual = float(np.max(np.abs((eigenvectors * eigenvalues) @ eigenvectors.conj().T - a)))
        else:
            eigenvalues = np.asarray(spectrum[0], dtype=float)
            eigenvectors = np.asarray(spectrum[1], dtype=np.complex128)
            if eigenvectors.shape != a.shape or eigenvalues.shape != (a.shape[0],):
                raise InputError("spectrum does not match the generator's dimension")
            trial = np.random.default_rng(0).standard_normal(a.shape[0]).astype(np.complex128)
            rebuilt = eigenvectors @ (eigenvalues * (eigenvectors.conj().T @ trial))
            residual = float(np.max(np.abs(rebuilt - a @ trial))) / max(1.0, float(np.max(np.abs(trial))))
        if residual > GLOBALS.RECONSTRUCTION_TOL * scale:
            raise InputError(f"spectral decomposition does not reproduce the generator ({residual:.3g})")
        logger.debug(f"generator dim {a.shape[0]}, spectrum [{eigenvalues.min():.6g}, {eigenvalues.max():.6g}]")

        for arr in (a, eigenvalues, eigenvectors):
            arr.flags.writeable = False
        self._matrix = a
        self._eigenvalues = eigenvalues
        self._eigenvectors = eigenvectors

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._eigenvalues

    @property
    def eigenvectors(self) -> np.ndarray:
        return self._eigenvectors

    @property
    def dim(self) -> int:
        return int(self._matrix.shape[0])

    def scaled(self, factor: float) -> "HermitianGenerator":
        """factor * A, reusing the eigenvectors."""
        if not math.isfinite(factor):
            raise InputError("scale factor must be finite")
        return HermitianGenerator(factor * self._matrix, spectrum=(factor * self._eigenvalues, self._eigenvectors))

    @classmethod
    def diagonal(cls, values: Sequence[float]) -> "HermitianGenerator":
        values = np.asarray(values, dtype=float)
        return cls(np.diag(values).astype(np.complex128), spectrum=(values, np.eye(values.size)))


@dataclass(frozen=True)
class EvolutionContext:
    generator: HermitianGenerator
    hbar: float = 1.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.hbar) and self.hbar > 0):
            raise InputError(f"hbar must be positive, got {self.hbar!r}")


@dataclass(frozen=True)
class OrbitStats:
    mean: float
    std_dev: float
    omega: float


@dataclass(frozen=True)
class ProfilePoint:
    deltas: float
    angle: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.angle <= min(GLOBALS.RIGHT_ANGLE, self.bound) + GLOBALS.VERDICT_TOL


@dataclass(frozen=True)
class SweepSummary:
    trials: int
    substantial: int
    counterexamples: int
    min_product: Optional[float]


def _state_for(generator: HermitianGenerator, psi: ArrayLike) -> np.ndarray:
    v = _as_vector(psi)
    if v.shape[0] != generator.dim:
        raise InputError(f"dimension mismatch: generator {generator.dim} vs state {v.shape[0]}")
    return v


def _spectral_weights(ctx: EvolutionContext, psi0: ArrayLike) -> np.ndarray:
    v = _state_for(ctx.generator, psi0)
    return np.abs(ctx.generator.eigenvectors.conj().T @ v) ** 2


def evolve(ctx: EvolutionContext, psi0: ArrayLike, deltas: float) -> StateVector:
    """U(ds) psi0 = V diag(exp(-i ds lambda / hbar)) V^H psi0."""
    v = _state_for(ctx.generator, psi0)
    g = ctx.generator
    coeffs = g.eigenvectors.conj().T @ v
    phases = np.exp(-1j * deltas * g.eigenvalues / ctx.hbar)
    return StateVector(g.eigenvectors @ (phases * coeffs))


def survival_amplitude(ctx: EvolutionContext, psi0: ArrayLike, deltas: ArrayLike) -> np.ndarray:
    """<psi0|U(ds) psi0> for every ds, from the spectral weights of psi0."""
    weights = _spectral_weights(ctx, psi0)
    ds = np.atleast_1d(np.asarray(deltas, dtype=float))
    return np.exp(-1j * np.outer(ds, ctx.generator.eigenvalues) / ctx.hbar) @ weights


def _orbit_angles(ctx: EvolutionContext, psi0: ArrayLike, deltas: ArrayLike) -> np.ndarray:
    weights = _spectral_weights(ctx, psi0)
    weights = weights / weights.sum()
    ds = np.atleast_1d(np.asarray(deltas, dtype=float))
    phases = np.exp(-1j * np.outer(ds, ctx.generator.eigenvalues) / ctx.hbar)
    amp = phases @ weights
    # 1 - |amp|^2 is the weighted spread of the phases around amp; exact zero for eigenstates.
    spread = (np.abs(phases - amp[:, None]) ** 2) @ weights
    small = np.arcsin(np.sqrt(np.clip(spread, 0.0, 1.0)))
    large = np.arccos(np.clip(np.abs(amp), 0.0, 1.0))
    return np.where(np.abs(amp) >= math.sqrt(0.5), small, large)


def mean(a: HermitianGenerator, psi: ArrayLike) -> float:
    """<psi|A|psi>; the imaginary roundoff is dropped."""
    v = _state_for(a, psi)
    value = np.vdot(v, a.matrix @ v)
    if abs(value.imag) > 1e-10 * max(1.0, float(np.max(np.abs(a.matrix)))):
        logger.warning(f"mean has imaginary residue {value.imag:.3g}")
    return float(value.real)


def std_dev(a: HermitianGenerator, psi: ArrayLike) -> float:
    """<(A - mean)^2>^(1/2), taken as the norm of (A - mean) psi."""
    v = _state_for(a, psi)
    av = a.matrix @ v
    abar = float(np.vdot(v, av).real)
    return float(np.linalg.norm(av - abar * v))


def orbit_stats(ctx: EvolutionContext, psi0: ArrayLike) -> OrbitStats:
    m = mean(ctx.generator, psi0)
    s = std_dev(ctx.generator, psi0)
    return OrbitStats(mean=m, std_dev=s, omega=s / ctx.hbar)


def velocity(ctx: EvolutionContext, psi: ArrayLike) -> np.ndarray:
    """Analytic quantum velocity A psi / (i hbar) along the orbit."""
    v = _state_for(ctx.generator, psi)
    return (ctx.generator.matrix @ v) / (1j * ctx.hbar)


def orbit_curve(ctx: EvolutionContext, psi0: ArrayLike, grid: Sequence[float]) -> Curve:
    grid = np.asarray(grid, dtype=float)
    return Curve(grid, tuple(evolve(ctx, psi0, float(ds)) for ds in grid))


def angle_profile(ctx: EvolutionContext, psi0: ArrayLike, deltas_grid: Sequence[float]) -> List[ProfilePoint]:
    """Per node: the angle turned by the orbit and the bound |ds| dA / hbar."""
    grid = np.asarray(deltas_grid, dtype=float)
    if not np.all(np.isfinite(grid)):
        raise InputError("profile grid must be finite")
    omega = orbit_stats(ctx, psi0).omega
    angles = _orbit_angles(ctx, psi0, grid) if grid.size else np.zeros(0)
    return [
        ProfilePoint(deltas=float(ds), angle=float(angle), bound=abs(float(ds)) * omega)
        for ds, angle in zip(grid, angles)
    ]


def certainty_verdict(ctx: EvolutionContext, psi0: ArrayLike, deltas: float) -> BoundReport:
    """
    If U(ds) changes psi0 substantially, report hbar <= |ds| dA.

    Otherwise the premise is false and the report holds vacuously
    (applicable=False); lhs and rhs are still filled in.
    """
    evolved = evolve(ctx, psi0, deltas)
    angle = quantum_angle(evolved, psi0).radians
    spread = std_dev(ctx.generator, psi0)
    substantial = differ_substantially(evolved, psi0)
    return BoundReport.compare(
        lhs=ctx.hbar,
        rhs=abs(deltas) * spread,
        tolerance=GLOBALS.VERDICT_TOL * ctx.hbar,
        context="certainty principle |ds| dA >= hbar",
        applicable=substantial,
        angle=angle,
        deltas=float(deltas),
        std_dev=spread,
    )


def minimal_substantial_shift(
    ctx: EvolutionContext,
    psi0: ArrayLike,
    search: Tuple[float, float],
) -> Optional[float]:
    """
    Smallest ds in (start, stop] with angle(U(ds) psi0, psi0) >= 1, or None if the
    orbit never gets that far inside the range.

    A grid scan with step min(0.01 hbar / dA, range / 1000) finds the first
    crossing (the angle can grow by at most dA / hbar per unit ds), and brentq
    polishes it.

    Args:
        ctx (EvolutionContext): Generator and hbar of the group.
        psi0 (ArrayLike): Initial state.
        search (Tuple[float, float]): Range (start, stop] with 0 <= start < stop.

    Returns:
        Optional[float]: The first substantial shift, or None.
    """
    start, stop = float(search[0]), float(search[1])
    if not (math.isfinite(start) and math.isfinite(stop)) or stop <= start or start < 0:
        raise InputError(f"empty or invalid search range ({start}, {stop})")
    spread = std_dev(ctx.generator, psi0)
    if spread <= GLOBALS.ZERO_TOL * max(1.0, float(np.max(np.abs(ctx.generator.matrix)))):
        logger.debug(f"stationary ray (dA = {spread:.3g}): never substantial")
        return None

    span = stop - start
    step = min(0.01 * ctx.hbar / spread, span / 1000.0)
    target = GLOBALS.SUBSTANTIAL_ANGLE
    prev = start
    chunk = 4096
    n_steps = int(math.ceil(span / step))
    logger.debug(f"scan ({start:.6g}, {stop:.6g}] with step {step:.3g} ({n_steps} nodes)")
    for offset in range(0, n_steps, chunk):
        idx = np.arange(offset + 1, min(offset + chunk, n_steps) + 1)
        grid = np.minimum(start + idx * step, stop)
        angles = _orbit_angles(ctx, psi0, grid)
        hits = np.nonzero(angles >= target)[0]
        if hits.size:
            hi = float(grid[hits[0]])
            lo = float(grid[hits[0] - 1]) if hits[0] > 0 else prev
            if angles[hits[0]] == target:
                return hi

            def excess(ds: float) -> float:
                return float(_orbit_angles(ctx, psi0, ds)[0]) - target

            if excess(lo) >= 0:
                return lo
            root = scipy.optimize.brentq(excess, lo, hi, xtol=GLOBALS.SHIFT_XTOL, rtol=4 * np.finfo(float).eps)
            logger.debug(f"first substantial shift {root:.12g} in [{lo:.12g}, {hi:.12g}]")
            return float(root)
        prev = float(grid[-1])
    return None


def shift_report(ctx: EvolutionContext, delta_star: Optional[float], spread: float, context: str) -> BoundReport:
    """hbar <= delta_star * dA for a located first substantial shift."""
    if delta_star is None:
        return BoundReport.compare(
            lhs=ctx.hbar, rhs=0.0, tolerance=0.0, context=context, applicable=False, delta_star=None
        )
    return BoundReport.compare(
        lhs=ctx.hbar,
        rhs=abs(delta_star) * spread,
        tolerance=1e-6 * ctx.hbar,
        context=context,
        delta_star=delta_star,
    )


def combined_generator(coeffs: Sequence[float], gens: Sequence[HermitianGenerator]) -> HermitianGenerator:
    """
    sum_i c_i A_i, re-verified Hermitian.

    Generators that share one eigenvector matrix (the same array, as produced for
    commuting tensor-lifted axes) are combined in that basis; otherwise the sum is
    diagonalized afresh.
    """
    gens = list(gens)
    coeffs = [float(c) for c in coeffs]
    if not gens:
        raise InputError("combined_generator needs at least one generator")
    if len(coeffs) != len(gens):
        raise InputError(f"{len(coeffs)} coefficients for {len(gens)} generators")
    if not all(math.isfinite(c) for c in coeffs):
        raise InputError("coefficients must be finite")
    dim = gens[0].dim
    if any(g.dim != dim for g in gens):
        raise InputError("generators must share one dimension")

    matrix = sum(c * g.matrix for c, g in zip(coeffs, gens))
    basis = gens[0].eigenvectors
    if all(g.eigenvectors is basis for g in gens):
        eigenvalues = sum(c * g.eigenvalues for c, g in zip(coeffs, gens))
        return HermitianGenerator(matrix, spectrum=(eigenvalues, basis))
    return HermitianGenerator(matrix)


def random_generator(dim: int, seed: SeedLike = None, scale: float = 1.0) -> HermitianGenerator:
    """(G + G^H) / 2 for a complex Gaussian G, times scale."""
    if dim < 1:
        raise InputError(f"dimension must be positive, got {dim}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return HermitianGenerator(scale * (g + g.conj().T) / 2)


def certainty_sweep(
    dims: Sequence[int] = (2, 3, 4, 8),
    trials: int = 1000,
    seed: SeedLike = 0,
    hbar: float = 1.0,
) -> SweepSummary:
    """
    Randomized check of "substantial => |ds| dA >= hbar" over random generators,
    states and shifts (ds drawn up to 4 hbar / dA so that many trials are substantial).

    Args:
        dims (Sequence[int]): Dimensions to draw from.
        trials (int): Number of random (generator, state, shift) draws.
        seed (SeedLike): Seed or numpy Generator.
        hbar (float): Reduced Planck constant.
    """
    if trials < 1:
        raise InputError("trials must be positive")
    rng = np.random.default_rng(seed)
    target = GLOBALS.SUBSTANTIAL_ANGLE
    substantial = counterexamples = 0
    min_product: Optional[float] = None
    for _ in range(trials):
        dim = int(rng.choice(dims))
        ctx = EvolutionContext(random_generator(dim, rng, scale=float(rng.uniform(0.1, 10.0))), hbar)
        psi = random_state(dim, rng)
        spread = std_dev(ctx.generator, psi)
        if spread == 0.0:
            continue
        ds = float(rng.uniform(-4.0, 4.0)) * hbar / spread
        angle = float(_orbit_angles(ctx, psi, ds)[0])
        if angle < target:
            continue
        substantial += 1
        product = abs(ds) * spread / hbar
        min_product = product if min_product is None else min(min_product, product)
        if product < 1.0 - GLOBALS.VERDICT_TOL:
            counterexamples += 1
            logger.warning(f"counterexample: dim {dim}, ds {ds:.6g}, product {product:.12g}")
    return SweepSummary(trials, substantial, counterexamples, min_product)
