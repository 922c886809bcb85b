import numpy as np
import pytest

from yfluor import AtomParams, build, derivative, pack, unpack
from yfluor.dressed import hamiltonian_matrix
from yfluor.liouvillian import ground_rate
from yfluor.params import CONJUGATE, index, projector

from conftest import fig_params, random_density, random_params


def transition(m, n):
    op = np.zeros((4, 4))
    op[m - 1, n - 1] = 1.0
    return op


def master_equation(params, rho):
    """Full 4x4 master equation with cross-damping between the two upper decays.

    Written independently of both production code paths: commutator with the
    interaction Hamiltonian plus Lindblad terms with the rate matrix
    ``[[g1, q], [q, g2]]`` on the ``1 -> 3`` and ``2 -> 3`` lowering operators.
    """
    H = hamiltonian_matrix(params)
    out = -1j * (H @ rho - rho @ H)
    q = params.cross_rate
    lowering = [transition(3, 1), transition(3, 2)]
    rates = [[params.gamma1, q], [q, params.gamma2]]
    for i in range(2):
        for j in range(2):
            a, b = lowering[i], lowering[j]
            out += rates[i][j] * (2 * b @ rho @ a.T - a.T @ b @ rho - rho @ a.T @ b)
    c = transition(4, 3)
    out += params.gamma3 * (2 * c @ rho @ c.T - c.T @ c @ rho - rho @ c.T @ c)
    return out


def test_undriven_first_row_is_pure_decay():
    L = build(AtomParams(gamma1=0.7, gamma2=0.4, w12=2.0, delta_a=1.0)).L
    assert L[0, 0] == -1.4
    assert np.count_nonzero(L[0]) == 1


def test_inhomogeneous_term():
    system = build(fig_params("2b", omega3=2.5))
    expected = np.zeros(15, dtype=complex)
    expected[8], expected[14] = 2.5j, -2.5j
    assert np.array_equal(system.I, expected)


def test_pure_decay_derivative():
    params = AtomParams(gamma1=0.8)
    d = derivative(params, pack(projector(1)))
    assert d[index(1, 1)] == -1.6 and d[index(3, 3)] == 1.6
    assert np.count_nonzero(d) == 2


def test_interference_couples_excited_populations_into_coherence():
    params = AtomParams(gamma1=1.5, gamma2=1.5, p=1.0)
    d = derivative(params, pack(projector(1)))
    assert d[index(1, 2)] == pytest.approx(-1.5)
    assert d[index(2, 1)] == pytest.approx(-1.5)


def test_ground_state_derivative_is_inhomogeneous_term():
    params = fig_params("5a", omega3=1.7)
    d = derivative(params, np.zeros(15))
    assert d[8] == 1.7j and d[14] == -1.7j
    assert np.count_nonzero(d) == 2


def test_builder_matches_direct_transcription_on_population_figure_params(rng):
    system = build(fig_params("2b", p=1.0))
    for _ in range(5):
        psi = pack(random_density(rng))
        assert np.abs(system.rhs(psi) - derivative(system.params, psi)).max() <= 1e-12


def test_builder_matches_direct_transcription_random(rng):
    for _ in range(100):
        params = random_params(rng, w12_min=0.0)
        system = build(params)
        psi = rng.normal(size=15) + 1j * rng.normal(size=15)
        assert np.abs(system.rhs(psi) - derivative(params, psi)).max() <= 1e-12


def test_both_paths_match_master_equation(rng):
    for _ in range(20):
        params = random_params(rng, w12_min=0.0)
        rho = random_density(rng)
        full = master_equation(params, rho)
        assert np.abs(derivative(params, pack(rho)) - pack(full)).max() <= 1e-12
        assert np.abs(build(params).rhs(pack(rho)) - pack(full)).max() <= 1e-12
        assert ground_rate(params, pack(rho)) == pytest.approx(full[3, 3], abs=1e-12)


def test_conjugation_symmetry(rng):
    L = build(random_params(rng)).L
    for j in range(15):
        for k in range(15):
            assert L[CONJUGATE[j], CONJUGATE[k]] == np.conj(L[j, k])


def test_linear_in_p(rng):
    params = random_params(rng)
    L0 = build(params.replace(p=0.0)).L
    L1 = build(params.replace(p=1.0)).L
    Lp = build(params).L
    assert np.abs(Lp - (L0 + params.p * (L1 - L0))).max() <= 1e-14


def test_trace_is_conserved(rng):
    params = random_params(rng)
    psi = pack(random_density(rng))
    d = derivative(params, psi)
    total = d[0] + d[1] + d[2] + ground_rate(params, psi)
    assert abs(total) <= 1e-12


def test_hermiticity_is_preserved(rng):
    params = random_params(rng)
    d = unpack(derivative(params, pack(random_density(rng))))
    assert np.abs(d[:3, :3] - d[:3, :3].conj().T).max() <= 1e-12


def test_derivative_broadcasts(rng):
    params = random_params(rng)
    psis = np.stack([pack(random_density(rng)) for _ in range(4)], axis=1)
    batched = derivative(params, psis)
    for k in range(4):
        assert np.allclose(batched[:, k], derivative(params, psis[:, k]), atol=1e-15)


def test_augmented_generator():
    system = build(fig_params("3a"))
    G = system.augmented()
    assert G.shape == (16, 16)
    assert np.array_equal(G[:15, 15], system.I)
    assert not G[15].any()


def test_csv_dump_round_trips(tmp_path):
    system = build(fig_params("5a", p=0.5))
    system.to_csv(tmp_path / "L.csv", tmp_path / "I.csv")
    rows = np.loadtxt(tmp_path / "L.csv", delimiter=",", skiprows=1)
    L = np.zeros((15, 15), dtype=complex)
    for r, c, re, im in rows:
        L[int(r) - 1, int(c) - 1] = re + 1j * im
    assert np.array_equal(L, system.L)
    rows = np.loadtxt(tmp_path / "I.csv", delimiter=",", skiprows=1)
    assert rows.tolist() == [[9, 1, 0.0, system.params.omega3],
                             [15, 1, 0.0, -system.params.omega3]]
