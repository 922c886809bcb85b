import numpy as np
import pytest

from yfluor import (AtomParams, NotConverged, SingularLiouvillian, StepTooLarge, analytic_rho11,
                    build, pack, propagate, propagate_to_steady, steady_state, sweep)
from yfluor.dynamics import analytic_deviation, params_at
from yfluor.params import is_physical, projector
from yfluor.peaks import local_maxima

from conftest import fig_params, random_params


def antisymmetric_state():
    return projector(np.array([1.0, -1.0, 0.0, 0.0]) / np.sqrt(2.0))


def test_undriven_atom_relaxes_to_ground():
    rho = steady_state(AtomParams(gamma1=1.0, gamma2=2.0, w12=1.0))
    assert np.array_equal(rho, projector(4).astype(complex))


def test_degenerate_maximal_interference_is_singular():
    with pytest.raises(SingularLiouvillian):
        steady_state(AtomParams(gamma1=1, gamma2=1, w12=0, omega1=3, omega2=3, omega3=3, p=1))


@pytest.mark.parametrize("p,target", [(1.0, 0.25), (0.0, 1.0 / 6.0)])
def test_high_intensity_resonance_population(p, target):
    params = fig_params("3b", p=p)
    rho11 = steady_state(params)[0, 0].real
    assert abs(rho11 - target) <= 0.1 * target


def test_steady_state_solves_equations_and_is_physical(rng):
    for _ in range(10):
        params = random_params(rng)
        rho = steady_state(params)
        system = build(params)
        assert np.abs(system.rhs(pack(rho))).max() <= 1e-10
        assert is_physical(rho, tol=1e-8)


def test_rescaling_all_frequencies_leaves_populations_unchanged(rng):
    params = random_params(rng)
    a = steady_state(params)
    b = steady_state(params.scaled(3.7))
    assert np.abs(a - b).max() <= 1e-10


def test_free_decay_of_lower_excited_level():
    rho = propagate(AtomParams(gamma3=1.0), projector(3), 1.0, dt=1e-3)
    assert abs(rho[2, 2].real - np.exp(-2.0)) <= 1e-6


def test_propagation_reaches_steady_state():
    params = fig_params("2b", p=1.0)
    rho = propagate(params, projector(4), 50.0)
    assert np.abs(rho - steady_state(params)).max() <= 1e-7


def test_propagate_to_steady_matches_linear_solve():
    params = fig_params("2a", p=1.0)
    rho, t = propagate_to_steady(params)
    assert t < 1e3
    assert np.abs(rho - steady_state(params)).max() <= 1e-7


def test_propagate_zero_time_is_identity():
    rho0 = projector(2)
    assert np.allclose(propagate(fig_params("2a"), rho0, 0.0), rho0)


def test_oversized_step_is_detected():
    with pytest.raises(StepTooLarge):
        propagate(fig_params("3a"), projector(4), 10.0, dt=1.0)


def test_antisymmetric_population_is_trapped():
    params = AtomParams(gamma1=1.0, gamma2=1.0, w12=0.0, p=1.0)
    rho = propagate(params, antisymmetric_state(), 20.0)
    v = np.array([1.0, -1.0]) / np.sqrt(2.0)
    assert abs(v @ rho[:2, :2] @ v - 1.0) <= 1e-12


def test_slow_convergence_is_reported():
    params = AtomParams(gamma1=1.0, gamma2=1.0, w12=0.0, omega1=1, omega2=1, omega3=1, p=1.0)
    with pytest.raises(NotConverged):
        propagate_to_steady(params, projector(4), t_max=5.0)


def test_single_resonance_without_interference():
    grid = np.linspace(-15, 15, 601)
    series = sweep(fig_params("2a", p=0.0), "delta_a", grid)
    peaks = local_maxima(series.populations[:, 0])
    assert len(peaks) == 1
    assert abs(grid[peaks[0]]) < 1.5


def test_split_resonances_at_plus_minus_omega():
    grid = np.linspace(-20, 20, 401)
    series = sweep(fig_params("3a", p=1.0), "delta_a", grid)
    peaks = grid[local_maxima(series.populations[:, 0])]
    assert len(peaks) == 2
    assert np.allclose(peaks, [-10.0, 10.0], atol=1.0)


def test_sweep_records_singular_points():
    base = AtomParams(gamma1=1, gamma2=1, omega1=3, omega2=3, omega3=3, p=1)
    series = sweep(base, "w12", [0.0, 1.0])
    assert list(series.errors) == [0]
    assert series.ok.tolist() == [False, True]
    pops = series.populations[1]
    assert abs(pops.sum() - 1.0) <= 1e-8 and np.all(pops >= -1e-8)


def test_sweep_rejects_unknown_axis():
    with pytest.raises(ValueError):
        sweep(AtomParams(), "bogus", [0.0])


def test_params_at_sets_all_fields_of_an_axis():
    params = params_at(AtomParams(), "omega_all", 2.0)
    assert (params.omega1, params.omega2, params.omega3) == (2.0, 2.0, 2.0)
    assert params_at(AtomParams(omega3=5), "omega12", 1.0).omega3 == 5.0


def test_analytic_formula_on_resonance():
    assert analytic_rho11(0.0, 10.0, 1) == pytest.approx(0.25, abs=1e-15)
    assert analytic_rho11(0.0, 10.0, 0) == pytest.approx(1.0 / 6.0, abs=1e-15)


def test_analytic_formula_far_detuned_tail():
    d = np.array([1e4, 1e5, 1e6])
    for p in (0, 1):
        tail = analytic_rho11(d, 10.0, p)
        assert np.all(np.diff(tail) < 0) and tail[-1] < 1e-6


def test_analytic_formula_only_for_limiting_p():
    with pytest.raises(ValueError):
        analytic_rho11(0.0, 10.0, 0.5)


def test_analytic_formula_tracks_full_solution():
    # diagnostic bound: the closed form follows the numerical curve closely
    grid = np.linspace(-20, 20, 81)
    for p in (0, 1):
        assert analytic_deviation(grid, 10.0, p) < 0.05
