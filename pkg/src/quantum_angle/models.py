"""
Concrete systems for the certainty principle.

  - LineGrid: a particle on a periodic line grid (a stand-in for the infinite line),
    with the shift group generated by the momentum operator. P is built spectrally
    in the discrete Fourier basis, so U(dx) is an exact shift for any real dx.
  - CircleModel: a particle on a circle in the Fourier-mode basis, where the
    angular momentum J is diagonal and rotations are exact phase multiplications.
  - LevelModel: a time-independent Hamiltonian given by its levels and weights,
    for the time-energy (lifetime) form of the bound.
  - spin operators J_x, J_y, J_z: rotations about an arbitrary axis, generated
    by a combination of non-commuting components.

Every demo returns a DemoRecord with the frozen fields
{demo, parameters, delta_star, std_dev, product, holds}.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .dynamics import (
    EvolutionContext,
    HermitianGenerator,
    angle_profile,
    certainty_verdict,
    combined_generator,
    mean,
    minimal_substantial_shift,
    orbit_stats,
    shift_report,
    std_dev,
)
from .hilbert import ArrayLike, StateVector, _as_vector, normalize, quantum_angle
from .utils.errors import GuardError, InputError
from .utils.globals import GLOBALS
from .utils.reports import BoundReport

logger = logging.getLogger(__name__)

# Packets must keep this many sigmas clear of the periodic boundary.
BOUNDARY_SIGMAS = 6.0
MIN_SIGMA_SPACINGS = 5.0
MIN_BUMP_SPACINGS = 10.0
PAULI_WEYL_TOL = 1e-6


@dataclass(frozen=True)
class LineGrid:
    """n nodes x_k = -L/2 + k L/n on a periodic interval of length L."""

    n: int
    length: float

    def __post_init__(self) -> None:
        if self.n < 8 or self.n % 2:
            raise InputError(f"line grid needs an even node count >= 8, got {self.n}")
        if not (math.isfinite(self.length) and self.length > 0):
            raise InputError(f"line grid length must be positive, got {self.length}")

    @property
    def spacing(self) -> float:
        return self.length / self.n

    @property
    def positions(self) -> np.ndarray:
        return -self.length / 2 + np.arange(self.n) * self.spacing

    @property
    def wavenumbers(self) -> np.ndarray:
        """k_j in FFT order, with the Nyquist mode taken as +n/2 (range -n/2+1 .. n/2)."""
        m = np.fft.fftfreq(self.n, d=1.0 / self.n)
        m[self.n // 2] = self.n // 2
        return m * (2 * np.pi / self.length)

    def fourier_basis(self) -> np.ndarray:
        """Unitary matrix whose columns are the sampled plane waves e^{i k_j x}."""
        return np.exp(1j * np.outer(self.positions, self.wavenumbers)) / np.sqrt(self.n)


@dataclass(frozen=True)
class CircleModel:
    """Fourier modes m = -M .. M of 2pi-periodic wave functions."""

    m_max: int

    def __post_init__(self) -> None:
        if self.m_max < 1:
            raise InputError(f"circle model needs m_max >= 1, got {self.m_max}")

    @property
    def dim(self) -> int:
        return 2 * self.m_max + 1

    @property
    def modes(self) -> np.ndarray:
        return np.arange(-self.m_max, self.m_max + 1)

    def index(self, m: int) -> int:
        if abs(m) > self.m_max:
            raise InputError(f"mode {m} outside -{self.m_max}..{self.m_max}")
        return m + self.m_max


@dataclass(frozen=True, eq=False)
class LevelModel:
    energies: np.ndarray
    weights: np.ndarray

    def __post_init__(self) -> None:
        e = np.array(self.energies, dtype=float, copy=True)
        w = np.array(self.weights, dtype=float, copy=True)
        if e.ndim != 1 or e.size < 1 or e.shape != w.shape:
            raise InputError("energies and weights must be equal-length non-empty sequences")
        if not (np.all(np.isfinite(e)) and np.all(np.isfinite(w))):
            raise InputError("energies and weights must be finite")
        if np.any(w < 0):
            raise InputError("weights must be non-negative")
        if abs(w.sum() - 1.0) > 1e-12:
            raise InputError(f"weights must sum to 1, got {w.sum()!r}")
        e.flags.writeable = False
        w.flags.writeable = False
        object.__setattr__(self, "energies", e)
        object.__setattr__(self, "weights", w)

    @classmethod
    def from_unnormalized(cls, energies: Sequence[float], weights: Sequence[float]) -> "LevelModel":
        w = np.asarray(weights, dtype=float)
        if np.any(w < 0) or w.sum() <= 0:
            raise InputError("weights must be non-negative with a positive sum")
        return cls(np.asarray(energies, dtype=float), w / w.sum())


@dataclass(frozen=True)
class DemoRecord:
    demo: str
    parameters: Dict[str, Any]
    delta_star: Optional[float]
    std_dev: float
    product: Optional[float]
    holds: bool
    report: Optional[BoundReport] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "demo": self.demo,
            "parameters": dict(self.parameters),
            "delta_star": self.delta_star,
            "std_dev": self.std_dev,
            "product": self.product,
            "holds": self.holds,
        }
        if self.details:
            out["details"] = dict(self.details)
        if self.report is not None:
            out["report"] = self.report.to_dict()
        return out


# ---- line ----------------------------------------------------------------------


@functools.lru_cache(maxsize=8)
def momentum_operator(g: LineGrid, hbar: float = 1.0) -> HermitianGenerator:
    """P = -i hbar d/dx, diagonal (hbar k_j) in the plane-wave basis."""
    if not hbar > 0:
        raise InputError(f"hbar must be positive, got {hbar!r}")
    basis = g.fourier_basis()
    p = hbar * g.wavenumbers
    basis.flags.writeable = False
    return HermitianGenerator((basis * p) @ basis.conj().T, spectrum=(p, basis))


@functools.lru_cache(maxsize=8)
def position_operator(g: LineGrid) -> HermitianGenerator:
    return HermitianGenerator.diagonal(g.positions)


def _check_inside(g: LineGrid, lo: float, hi: float, what: str) -> None:
    half = g.length / 2
    if lo < -half or hi > half:
        raise GuardError(f"{what} [{lo:.6g}, {hi:.6g}] is clipped by the boundary [{-half:.6g}, {half:.6g}]")


def gaussian_packet(g: LineGrid, x0: float, p0: float, sigma: float, hbar: float = 1.0) -> StateVector:
    """exp(-(x - x0)^2 / (4 sigma^2)) exp(i p0 x / hbar), normalized on the grid."""
    if sigma < MIN_SIGMA_SPACINGS * g.spacing:
        raise GuardError(f"sigma {sigma:.6g} under-resolved (needs >= {MIN_SIGMA_SPACINGS} grid spacings)")
    _check_inside(g, x0 - BOUNDARY_SIGMAS * sigma, x0 + BOUNDARY_SIGMAS * sigma, "packet support")
    x = g.positions
    return normalize(np.exp(-((x - x0) ** 2) / (4 * sigma**2)) * np.exp(1j * p0 * x / hbar))


def bump_packet(g: LineGrid, x0: float, support: float) -> StateVector:
    """Smooth bump exp(-1/(1 - u^2)), u = 2(x - x0)/l, exactly zero outside [x0 - l/2, x0 + l/2]."""
    if support < MIN_BUMP_SPACINGS * g.spacing:
        raise GuardError(f"support {support:.6g} under-resolved (needs >= {MIN_BUMP_SPACINGS} grid spacings)")
    _check_inside(g, x0 - support / 2, x0 + support / 2, "bump support")
    u = 2 * (g.positions - x0) / support
    inside = np.abs(u) < 1
    profile = np.zeros(g.n)
    profile[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return normalize(profile)


def shift_state(g: LineGrid, psi: ArrayLike, deltax: float) -> StateVector:
    """psi(x - dx), periodic, via multiplication by exp(-i k_j dx) in the Fourier basis."""
    v = _as_vector(psi)
    if v.shape[0] != g.n:
        raise InputError(f"state has {v.shape[0]} components, grid has {g.n}")
    return StateVector(np.fft.ifft(np.fft.fft(v) * np.exp(-1j * g.wavenumbers * deltax)))


def pauli_weyl_check(g: LineGrid, psi: ArrayLike, hbar: float = 1.0) -> BoundReport:
    """hbar/2 <= dX dP. Only meaningful for packets well away from the periodic boundary."""
    dx = std_dev(position_operator(g), psi)
    dp = std_dev(momentum_operator(g, hbar), psi)
    return BoundReport.compare(
        lhs=hbar / 2,
        rhs=dx * dp,
        tolerance=PAULI_WEYL_TOL,
        context="Pauli-Weyl dX dP >= hbar/2",
        delta_x=dx,
        delta_p=dp,
    )


def bump_corollary(g: LineGrid, x0: float, support: float, hbar: float = 1.0) -> BoundReport:
    """
    Shifting a bump by its own support width l with U(l) leaves disjoint supports
    (angle pi/2, which is substantial), so the certainty principle forces l dP >= hbar.

    The shift is periodic, so the moved support may wrap around the grid. Supports
    stay disjoint as long as 2 l <= L; past that the report is not applicable.

    Args:
        g (LineGrid): Grid carrying the packet.
        x0 (float): Centre of the bump.
        support (float): Support width l; the bump itself must fit inside the grid.
        hbar (float): Reduced Planck constant.

    Returns:
        BoundReport: hbar <= l dP, with the angle between the bump and its shift.
    """
    psi = bump_packet(g, x0, support)
    moved = shift_state(g, psi, support)
    angle = quantum_angle(psi, moved).radians
    dp = std_dev(momentum_operator(g, hbar), psi)
    return BoundReport.compare(
        lhs=hbar,
        rhs=support * dp,
        tolerance=GLOBALS.VERDICT_TOL * hbar,
        context="packet width l dP >= hbar",
        applicable=angle >= GLOBALS.SUBSTANTIAL_ANGLE,
        angle=angle,
        delta_p=dp,
    )


def line_demo(g: LineGrid, sigma: float = 1.0, hbar: float = 1.0, shift: Optional[float] = None) -> DemoRecord:
    """Gaussian packet on the line: Pauli-Weyl saturation and the first substantial shift."""
    psi = gaussian_packet(g, 0.0, 0.0, sigma, hbar)
    ctx = EvolutionContext(momentum_operator(g, hbar), hbar)
    dp = std_dev(ctx.generator, psi)
    pw = pauli_weyl_check(g, psi, hbar)
    shift = 4.0 * sigma if shift is None else shift
    overlap = abs(np.vdot(psi.amplitudes, shift_state(g, psi, shift).amplitudes))
    delta_star = minimal_substantial_shift(ctx, psi, (0.0, 10.0 * sigma))
    report = shift_report(ctx, delta_star, dp, "shift |dx| dP >= hbar")
    product = None if delta_star is None else delta_star * dp / hbar
    return DemoRecord(
        demo="line",
        parameters={"n": g.n, "length": g.length, "sigma": sigma, "hbar": hbar, "shift": shift},
        delta_star=delta_star,
        std_dev=dp,
        product=product,
        holds=report.holds and pw.holds,
        report=report,
        details={
            "delta_x": pw.details["delta_x"],
            "uncertainty_product": pw.rhs,
            "overlap_at_shift": float(overlap),
            "expected_overlap": math.exp(-(shift**2) / (8 * sigma**2)),
        },
    )


# ---- circle --------------------------------------------------------------------


def angular_momentum_operator(c: CircleModel, hbar: float = 1.0) -> HermitianGenerator:
    """J = -i hbar d/dphi, diagonal hbar m in the mode basis."""
    return HermitianGenerator.diagonal(hbar * c.modes)


def circle_state(c: CircleModel, modes: Sequence[int], weights: Optional[Sequence[float]] = None) -> StateVector:
    """Superposition of the given modes; equal weights unless stated."""
    if not modes:
        raise InputError("at least one mode is required")
    weights = [1.0] * len(modes) if weights is None else list(weights)
    if len(weights) != len(modes) or any(w < 0 for w in weights):
        raise InputError("need one non-negative weight per mode")
    amps = np.zeros(c.dim, dtype=np.complex128)
    for m, w in zip(modes, weights):
        amps[c.index(int(m))] += math.sqrt(w)
    return normalize(amps)


def rotation_state(c: CircleModel, psi: ArrayLike, deltaphi: float) -> StateVector:
    """psi(phi - dphi): mode m picks up exp(-i m dphi)."""
    v = _as_vector(psi)
    if v.shape[0] != c.dim:
        raise InputError(f"state has {v.shape[0]} components, model has {c.dim}")
    return StateVector(v * np.exp(-1j * c.modes * deltaphi))


def circle_certainty_demo(c: CircleModel, state: ArrayLike, hbar: float = 1.0) -> DemoRecord:
    """
    |dphi| dJ >= hbar for rotations. A single-mode state has dJ = 0 and is never
    changed by any rotation, although it is a perfectly well-defined state; an
    analogue of dX dP >= hbar/2 has nothing to hold on to there.
    """
    ctx = EvolutionContext(angular_momentum_operator(c, hbar), hbar)
    stats = orbit_stats(ctx, state)
    delta_star = minimal_substantial_shift(ctx, state, (0.0, 2 * math.pi))
    report = shift_report(ctx, delta_star, stats.std_dev, "rotation |dphi| dJ >= hbar")
    eigenstate = delta_star is None and stats.std_dev <= GLOBALS.NORM_TOL * hbar
    if eigenstate:
        note = "angular momentum eigenstate: dJ = 0 and no rotation changes the state substantially"
    elif delta_star is None:
        note = "rotations never change this state substantially"
    else:
        note = "first substantial rotation located"
    return DemoRecord(
        demo="circle",
        parameters={"m_max": c.m_max, "hbar": hbar},
        delta_star=delta_star,
        std_dev=stats.std_dev,
        product=None if delta_star is None else delta_star * stats.std_dev / hbar,
        holds=report.holds,
        report=report,
        details={"mean": stats.mean, "eigenstate": eigenstate, "note": note},
    )


# ---- levels --------------------------------------------------------------------


def two_level_model(energy: float, gamma: float) -> LevelModel:
    """Levels energy -/+ gamma with equal weights (dH = gamma)."""
    return LevelModel(np.array([energy - gamma, energy + gamma]), np.array([0.5, 0.5]))


def gaussian_level_model(gamma: float, levels: int = 61, span: float = 4.0, energy: float = 0.0) -> LevelModel:
    """`levels` equally spaced energies over energy +/- span*gamma, Gaussian weights of width gamma."""
    if gamma <= 0 or levels < 2:
        raise InputError("need gamma > 0 and at least two levels")
    e = energy + np.linspace(-span * gamma, span * gamma, levels)
    return LevelModel.from_unnormalized(e, np.exp(-((e - energy) ** 2) / (2 * gamma**2)))


def lifetime_demo(m: LevelModel, hbar: float = 1.0, horizon: float = 20.0) -> DemoRecord:
    """
    Time shifts U(dt) = exp(-i dt (-H) / hbar) of psi0 = sqrt(weights) in the energy
    basis; t_star is the first time the state has changed substantially.
    """
    ctx = EvolutionContext(HermitianGenerator.diagonal(-m.energies), hbar)
    psi0 = StateVector(np.sqrt(m.weights).astype(np.complex128))
    delta_h = std_dev(ctx.generator, psi0)
    params = {"levels": int(m.energies.size), "hbar": hbar}
    if delta_h <= GLOBALS.NORM_TOL * max(1.0, float(np.max(np.abs(m.energies)))):
        return DemoRecord(
            demo="lifetime",
            parameters=params,
            delta_star=None,
            std_dev=delta_h,
            product=None,
            holds=True,
            details={"note": "never decays substantially"},
        )
    t_star = minimal_substantial_shift(ctx, psi0, (0.0, horizon * hbar / delta_h))
    report = shift_report(ctx, t_star, delta_h, "lifetime |dt| dH >= hbar")
    return DemoRecord(
        demo="lifetime",
        parameters=params,
        delta_star=t_star,
        std_dev=delta_h,
        product=None if t_star is None else t_star * delta_h / hbar,
        holds=report.holds,
        report=report,
        details={"mean_energy": -mean(ctx.generator, psi0)},
    )


def two_level_demo(gap: float = 1.0, hbar: float = 1.0) -> DemoRecord:
    """A = diag(gap, -gap) on the balanced state: the equality case |ds| dA = hbar."""
    ctx = EvolutionContext(HermitianGenerator.diagonal([gap, -gap]), hbar)
    psi0 = normalize([1.0, 1.0])
    spread = std_dev(ctx.generator, psi0)
    delta_star = minimal_substantial_shift(ctx, psi0, (0.0, 10.0 * hbar / spread))
    report = shift_report(ctx, delta_star, spread, "two-level |ds| dA >= hbar")
    return DemoRecord(
        demo="two-level",
        parameters={"gap": gap, "hbar": hbar},
        delta_star=delta_star,
        std_dev=spread,
        product=None if delta_star is None else delta_star * spread / hbar,
        holds=report.holds,
        report=report,
    )


# ---- several axes --------------------------------------------------------------


def _lift(gens: Sequence[HermitianGenerator]) -> List[HermitianGenerator]:
    """A_i acting on axis i of the tensor product, all sharing one eigenbasis."""
    basis = gens[0].eigenvectors
    for g in gens[1:]:
        basis = np.kron(basis, g.eigenvectors)
    basis.flags.writeable = False
    lifted = []
    for i, g in enumerate(gens):
        matrix = np.ones((1, 1), dtype=np.complex128)
        values = np.ones(1)
        for j, h in enumerate(gens):
            matrix = np.kron(matrix, h.matrix if i == j else np.eye(h.dim))
            values = np.kron(values, h.eigenvalues if i == j else np.ones(h.dim))
        lifted.append(HermitianGenerator(matrix, spectrum=(values, basis)))
    return lifted


def multi_axis_demo(
    grids: Sequence[LineGrid],
    sigmas: Sequence[float],
    displacement: Sequence[float],
    hbar: float = 1.0,
    tensor_oracle: bool = False,
) -> DemoRecord:
    """
    B = sum_i dx_i P_i on a product of Gaussians, checked at group parameter 1.

    For product states dB^2 = sum_i dx_i^2 dP_i^2; with tensor_oracle the same
    number is computed from the full tensor-product generator built by
    combined_generator (dense, so only for small grids).

    Args:
        grids (Sequence[LineGrid]): One grid per axis, two or three axes.
        sigmas (Sequence[float]): Gaussian width per axis.
        displacement (Sequence[float]): Shift dx_i per axis, the coefficients of B.
        hbar (float): Reduced Planck constant.
        tensor_oracle (bool): Also compute dB from the dense tensor generator.

    Returns:
        DemoRecord: dB in `std_dev`, the verdict at group parameter 1 in `report`.
    """
    if not 2 <= len(grids) <= 3:
        raise InputError(f"multi-axis demo takes 2 or 3 axes, got {len(grids)}")
    if not len(grids) == len(sigmas) == len(displacement):
        raise InputError("need one sigma and one displacement per axis")
    total = int(np.prod([g.n for g in grids]))
    if total > GLOBALS.MAX_TENSOR_DIM:
        raise GuardError(f"tensor dimension {total} exceeds {GLOBALS.MAX_TENSOR_DIM}")

    packets = [gaussian_packet(g, 0.0, 0.0, s, hbar) for g, s in zip(grids, sigmas)]
    ops = [momentum_operator(g, hbar) for g in grids]
    dps = [std_dev(p, psi) for p, psi in zip(ops, packets)]
    delta_b = math.sqrt(sum((d * dp) ** 2 for d, dp in zip(displacement, dps)))

    # U(1) = exp(-i B / hbar) shifts axis i by dx_i; the overlap factorizes.
    overlap = 1.0
    for g, psi, d in zip(grids, packets, displacement):
        overlap *= abs(np.vdot(psi.amplitudes, shift_state(g, psi, d).amplitudes))
    angle = float(np.arccos(min(1.0, overlap)))

    details: Dict[str, Any] = {"delta_p": dps, "angle": angle}
    if tensor_oracle:
        if total > GLOBALS.MAX_DENSE_DIM:
            raise GuardError(f"tensor oracle needs a dense {total}x{total} matrix; limit {GLOBALS.MAX_DENSE_DIM}")
        b = combined_generator(displacement, _lift(ops))
        state = packets[0].amplitudes
        for psi in packets[1:]:
            state = np.kron(state, psi.amplitudes)
        details["tensor_std_dev"] = std_dev(b, state)
        logger.debug(f"tensor dB {details['tensor_std_dev']:.15g} vs product formula {delta_b:.15g}")

    report = BoundReport.compare(
        lhs=hbar,
        rhs=delta_b,
        tolerance=GLOBALS.VERDICT_TOL * hbar,
        context="multi-axis d(dx_i P_i) >= hbar",
        applicable=angle >= GLOBALS.SUBSTANTIAL_ANGLE,
        angle=angle,
    )
    return DemoRecord(
        demo="multi-axis",
        parameters={
            "n": [g.n for g in grids],
            "length": [g.length for g in grids],
            "sigma": list(sigmas),
            "displacement": list(displacement),
            "hbar": hbar,
        },
        delta_star=None,
        std_dev=delta_b,
        product=delta_b / hbar,
        holds=report.holds,
        report=report,
        details=details,
    )

# ---- rotations about several axes ----------------------------------------------


def spin_operators(j: float, hbar: float = 1.0) -> Tuple[HermitianGenerator, HermitianGenerator, HermitianGenerator]:
    """
    J_x, J_y, J_z for spin j on the basis |j, m>, m = j, j-1, ..., -j.

    J_z and J_x, J_y do not commute: [J_x, J_y] = i hbar J_z. J_x and J_y are
    diagonalized on their own, so each carries a different eigenbasis.
    """
    two_j = 2.0 * j
    if not (math.isfinite(two_j) and two_j >= 1 and abs(two_j - round(two_j)) < 1e-12):
        raise InputError(f"spin must be a positive half-integer, got {j!r}")
    if not (math.isfinite(hbar) and hbar > 0):
        raise InputError(f"hbar must be positive, got {hbar!r}")
    m = j - np.arange(int(round(two_j)) + 1)
    # J_+ |j, m> = hbar sqrt(j(j+1) - m(m+1)) |j, m+1>
    raising = np.diag(hbar * np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1)), k=1).astype(np.complex128)
    lowering = raising.conj().T
    jx = HermitianGenerator((raising + lowering) / 2)
    jy = HermitianGenerator((raising - lowering) / 2j)
    return jx, jy, HermitianGenerator.diagonal(hbar * m)


def rotation_generator(j: float, dphi: Sequence[float], hbar: float = 1.0) -> HermitianGenerator:
    """B = dphi_x J_x + dphi_y J_y + dphi_z J_z; U(1) rotates by |dphi| about dphi."""
    if len(dphi) != 3:
        raise InputError(f"rotation needs three angles, got {len(dphi)}")
    return combined_generator(dphi, spin_operators(j, hbar))


def rotation_axes_demo(
    j: float,
    dphi: Sequence[float],
    state: Optional[ArrayLike] = None,
    hbar: float = 1.0,
) -> DemoRecord:
    """
    Rotation of a spin about a fixed axis: d(dphi_i J_i) >= hbar whenever the
    rotation by dphi changes the state substantially.

    Args:
        j (float): Spin, a positive half-integer (dimension 2j + 1).
        dphi (Sequence[float]): Rotation vector; its direction is the axis and its
            length the rotation angle at group parameter 1.
        state (Optional[ArrayLike]): Spin state; the top state |j, j> when None.
        hbar (float): Reduced Planck constant.

    Returns:
        DemoRecord: verdict at group parameter 1 in `report`, and the first
        substantial group parameter along the same axis in `delta_star`.
    """
    b = rotation_generator(j, dphi, hbar)
    if state is None:
        amps = np.zeros(b.dim, dtype=np.complex128)
        amps[0] = 1.0
        state = StateVector(amps)
    ctx = EvolutionContext(b, hbar)
    stats = orbit_stats(ctx, state)
    verdict = certainty_verdict(ctx, state, 1.0)
    params = {"j": float(j), "dphi": [float(x) for x in dphi], "hbar": hbar}
    details: Dict[str, Any] = {"mean": stats.mean, "angle": verdict.details["angle"]}

    if stats.std_dev <= GLOBALS.NORM_TOL * hbar:
        details["note"] = "eigenstate of the rotation generator: no rotation about this axis changes it"
        return DemoRecord(
            demo="rotation-axes",
            parameters=params,
            delta_star=None,
            std_dev=stats.std_dev,
            product=None,
            holds=verdict.holds,
            report=verdict,
            details=details,
        )
    delta_star = minimal_substantial_shift(ctx, state, (0.0, 10.0 * hbar / stats.std_dev))
    first = shift_report(ctx, delta_star, stats.std_dev, "rotation |s| d(dphi_i J_i) >= hbar")
    details["first_substantial"] = first.to_dict()
    return DemoRecord(
        demo="rotation-axes",
        parameters=params,
        delta_star=delta_star,
        std_dev=stats.std_dev,
        product=None if delta_star is None else delta_star * stats.std_dev / hbar,
        holds=verdict.holds and first.holds,
        report=verdict,
        details=details,
    )


def eigenstate_max_angle(c: CircleModel, m: int, hbar: float = 1.0, span: float = 4 * math.pi, nodes: int = 2001) -> float:
    """Largest angle a single-mode state turns through under rotations in [0, span]."""
    ctx = EvolutionContext(angular_momentum_operator(c, hbar), hbar)
    profile = angle_profile(ctx, circle_state(c, [m]), np.linspace(0.0, span, nodes))
    return max(p.angle for p in profile)
