"""Curves, angular speed, the arc-length estimate and geodesics."""

import math

import numpy as np
import pytest

from src.quantum_angle.dynamics import EvolutionContext, evolve, orbit_curve, random_generator, std_dev
from src.quantum_angle.hilbert import normalize, quantum_angle, random_state
from src.quantum_angle.kinematics import (
    Curve,
    angular_speed,
    angular_speeds,
    arc_length,
    check_estimate,
    cumulative_length,
    curve_from_function,
    curve_table,
    decompose_velocity,
    difference_quotient,
    geodesic,
    phase_align,
    velocity_at,
)
from src.quantum_angle.utils.errors import InputError


def _great_circle(t):
    """Unit-speed great circle carrying an extra global phase e^{it}."""
    return np.exp(1j * t) * np.array([math.cos(t), math.sin(t), 0.0])


def _quotient_gap(h, t=0.5):
    """|angular speed - difference quotient| on a great circle run at speed 2t."""
    c = curve_from_function(lambda s: [math.cos(s * s), math.sin(s * s), 0.0], [t - h, t, t + h])
    return abs(angular_speed(c, 1) - difference_quotient(c, 1))


def test_phase_does_not_change_angular_speed():
    c = curve_from_function(_great_circle, np.linspace(0.0, 1.0, 101))
    assert np.allclose(angular_speeds(c)[1:-1], 1.0, atol=1e-3)


def test_angular_speed_approaches_difference_quotient_under_grid_halving():
    errors = [_quotient_gap(h) for h in (0.1, 0.05, 0.025)]
    orders = [math.log2(errors[i] / errors[i + 1]) for i in range(2)]
    assert min(orders) >= 0.9


def test_difference_quotient_on_great_circle():
    c = curve_from_function(_great_circle, np.linspace(0.0, 1.0, 101))
    for k in (0, 17, 50, 100):
        assert difference_quotient(c, k) == pytest.approx(1.0, abs=1e-8)


def test_angular_speed_is_norm_of_orthogonal_velocity():
    base = random_state(4, 3).amplitudes
    c = curve_from_function(lambda t: np.exp(1j * t) * base + t * np.eye(4)[0], np.linspace(0, 1, 21))
    for k in range(c.n_nodes):
        d = decompose_velocity(c.states[k], velocity_at(c, k))
        assert angular_speed(c, k) == pytest.approx(float(np.linalg.norm(d.v_perp)), abs=1e-12)
        assert np.allclose(d.v_par + d.v_perp, d.v)
        assert abs(np.vdot(c.states[k].amplitudes, d.v_perp)) < 1e-10


def test_orbit_curve_speed_matches_spread():
    ctx = EvolutionContext(random_generator(5, 2), 1.0)
    psi = random_state(5, 9)
    curve = orbit_curve(ctx, psi, np.linspace(0.0, 1.0, 2001))
    omega = angular_speeds(curve)[1:-1]
    assert np.allclose(omega, std_dev(ctx.generator, psi), rtol=1e-5)


def test_geodesic_attains_the_angle():
    rng = np.random.default_rng(12)
    for _ in range(100):
        dim = int(rng.integers(2, 17))
        a, b = random_state(dim, rng), random_state(dim, rng)
        c = geodesic(a, b, 1000)
        assert c.n_nodes == 1001
        assert quantum_angle(c.states[-1], b).radians < 1e-6
        assert arc_length(c) == pytest.approx(quantum_angle(a, b).radians, abs=1e-6)


def test_geodesic_between_identical_rays():
    a = normalize([1, 1j])
    c = geodesic(a, a.with_phase(0.4), 10)
    assert c.n_nodes == 11
    assert arc_length(c) == pytest.approx(0.0, abs=1e-12)


def test_geodesic_needs_an_interval():
    with pytest.raises(InputError):
        geodesic([1, 0], [0, 1], 0)


def test_phase_align_makes_overlap_real(rng):
    a, b = random_state(3, rng), random_state(3, rng)
    overlap = np.vdot(phase_align(a, b).amplitudes, a.amplitudes)
    assert abs(overlap.imag) < 1e-12
    assert overlap.real >= 0


def test_estimate_on_random_orbits():
    rng = np.random.default_rng(77)
    for _ in range(100):
        ctx = EvolutionContext(random_generator(4, rng), 1.0)
        curve = orbit_curve(ctx, random_state(4, rng), np.linspace(0.0, 2.0, 201))
        report = check_estimate(curve)
        assert report.holds, report


def test_estimate_on_geodesic_is_tight():
    c = geodesic([1, 0, 0], normalize([1, 1j, 1]), 1000)
    report = check_estimate(c)
    assert report.holds
    assert report.slack == pytest.approx(0.0, abs=1e-6)


def test_nonuniform_grid_uses_trapezoid():
    t = np.concatenate([np.linspace(0.0, 0.5, 40, endpoint=False), np.linspace(0.5, 1.0, 81)])
    c = curve_from_function(lambda s: [math.cos(s), math.sin(s)], t)
    assert arc_length(c) == pytest.approx(1.0, abs=1e-3)


def test_cumulative_length_and_table():
    c = geodesic([1, 0], [0, 1], 20)
    cum = cumulative_length(c)
    assert cum[0] == 0.0
    assert cum[-1] == pytest.approx(math.pi / 2, abs=1e-2)
    table = curve_table(c)
    assert list(table.columns) == ["t", "omega", "cumulative_length", "angle_to_start"]
    assert len(table) == 21
    assert table["angle_to_start"].iloc[-1] == pytest.approx(math.pi / 2, abs=1e-9)


def test_single_node_curve():
    c = Curve(np.array([0.0]), (normalize([1, 0]),))
    assert len(curve_table(c)) == 1
    with pytest.raises(InputError):
        velocity_at(c, 0)


@pytest.mark.parametrize(
    "params, states",
    [
        ([0.0, 0.0], [[1, 0], [0, 1]]),
        ([1.0, 0.5], [[1, 0], [0, 1]]),
        ([0.0, 1.0], [[1, 0], [0, 0, 1]]),
        ([0.0], [[1, 0], [0, 1]]),
    ],
)
def test_invalid_curves(params, states):
    with pytest.raises(InputError):
        Curve(np.array(params), tuple(normalize(s) for s in states))


def test_node_out_of_range():
    c = geodesic([1, 0], [0, 1], 4)
    with pytest.raises(InputError):
        angular_speed(c, 9)


def test_velocity_of_analytic_curves():
    t = np.linspace(0.0, 1.0, 1001)
    circle = curve_from_function(lambda s: [math.cos(s), math.sin(s)], t)
    assert np.allclose(velocity_at(circle, 400), [-math.sin(0.4), math.cos(0.4)], atol=1e-6)
    spin = curve_from_function(lambda s: [np.exp(2j * s), 0.0], t)
    assert np.allclose(velocity_at(spin, 400), [2j * np.exp(0.8j), 0.0], atol=1e-5)
    still = curve_from_function(lambda s: [1.0, 0.0], t)
    assert np.array_equal(velocity_at(still, 400), [0.0, 0.0])


@pytest.mark.parametrize(
    "r, v, v_par, v_perp",
    [
        ([1, 0], [0.7j, 0.3], [0.7j, 0], [0, 0.3]),
        ([1 / math.sqrt(2), 1 / math.sqrt(2)], [1, 0], [0.5, 0.5], [0.5, -0.5]),
        ([0, 1], [0, 2j], [0, 2j], [0, 0]),
    ],
)
def test_decompose_velocity_examples(r, v, v_par, v_perp):
    d = decompose_velocity(r, v)
    assert np.allclose(d.v_par, v_par, atol=1e-15)
    assert np.allclose(d.v_perp, v_perp, atol=1e-15)


@pytest.mark.parametrize("dim", [2, 8, 32])
def test_decomposition_on_random_vectors(dim, rng):
    for _ in range(50):
        r = random_state(dim, rng)
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        d = decompose_velocity(r, v)
        assert np.allclose(d.v_par + d.v_perp, v, atol=1e-10)
        assert abs(np.vdot(r.amplitudes, d.v_perp)) < 1e-10


def test_pure_phase_motion_has_no_length(rng):
    base = random_state(5, rng).amplitudes
    c = curve_from_function(lambda t: np.exp(1j * (3 * math.sin(2 * t) + t * t)) * base, np.linspace(0.0, 2.0, 401))
    assert arc_length(c) < 1e-8
    assert np.all(angular_speeds(c) < 1e-8)


def test_backtracking_curve_is_strict():
    c = curve_from_function(
        lambda t: [math.cos(math.sin(math.pi * t)), math.sin(math.sin(math.pi * t))], np.linspace(0.0, 1.0, 1001)
    )
    report = check_estimate(c)
    assert report.lhs == pytest.approx(0.0, abs=1e-7)
    assert report.rhs == pytest.approx(2.0, abs=1e-4)
    assert report.holds
    assert report.slack > 1.9


def test_estimate_under_random_reparametrization():
    rng = np.random.default_rng(78)
    tau = np.linspace(0.0, 1.0, 401)
    for _ in range(100):
        ctx = EvolutionContext(random_generator(4, rng), 1.0)
        psi = random_state(4, rng)
        span, wobble = rng.uniform(0.2, 2.0), rng.uniform(-0.9, 0.9)
        s = span * (tau + wobble * np.sin(2 * math.pi * tau) / (2 * math.pi))
        curve = Curve(tau, tuple(evolve(ctx, psi, float(x)) for x in s))
        report = check_estimate(curve)
        assert report.holds, report


def test_competitors_are_never_shorter_than_the_geodesic():
    rng = np.random.default_rng(21)
    t = np.linspace(0.0, 1.0, 1001)
    for _ in range(30):
        dim = int(rng.integers(2, 17))
        a, b = random_state(dim, rng), random_state(dim, rng)
        end = phase_align(a, b).amplitudes
        bulge = 2 * random_state(dim, rng).amplitudes
        twist = rng.uniform(-3.0, 3.0)
        c = curve_from_function(
            lambda s: np.exp(1j * twist * s) * ((1 - s) * a.amplitudes + s * end + s * (1 - s) * bulge), t
        )
        assert quantum_angle(c.states[-1], b).radians < 1e-6
        assert arc_length(c) >= quantum_angle(a, b).radians - 1e-6


def test_phase_align_examples():
    aligned = phase_align([1, 0], [0.6j, 0.8j])
    assert np.allclose(aligned.amplitudes, [0.6, 0.8], atol=1e-15)
    assert np.vdot(aligned.amplitudes, [1, 0]) == pytest.approx(0.6, abs=1e-15)
    assert np.array_equal(phase_align([1, 0], [0, 1j]).amplitudes, [0, 1j])
    a = normalize([1, 2j, -1])
    assert np.vdot(phase_align(a, a.with_phase(2.2)).amplitudes, a.amplitudes) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("theta", [0.3, 1.9, -2.4])
def test_geodesic_to_an_equal_superposition(theta):
    c = geodesic([1, 0], normalize([1, np.exp(1j * theta)]), 1000)
    assert arc_length(c) == pytest.approx(math.pi / 4, abs=1e-6)
