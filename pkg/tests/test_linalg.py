import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yfluor.errors import NotSymmetric, SingularMatrix
from yfluor.linalg import eig_symmetric, inverse, lu_solve, rk4_step

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def well_conditioned(rng, n=15):
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return A + 3 * np.sqrt(n) * np.eye(n)


def test_identity_solve_returns_rhs(rng):
    b = rng.normal(size=15) + 1j * rng.normal(size=15)
    assert np.array_equal(lu_solve(np.eye(15), b), b)


def test_diagonal_solve():
    assert np.allclose(lu_solve(2.0 * np.eye(15), np.ones(15)), 0.5 * np.ones(15), atol=0)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_lu_solve_residual(seed):
    rng = np.random.default_rng(seed)
    A = well_conditioned(rng)
    b = rng.normal(size=15) + 1j * rng.normal(size=15)
    x = lu_solve(A, b)
    assert np.abs(A @ x - b).max() <= 1e-10 * np.abs(b).max()


def test_lu_solve_matrix_rhs(rng):
    A = well_conditioned(rng)
    B = rng.normal(size=(15, 3))
    assert np.allclose(A @ lu_solve(A, B), B, atol=1e-10)


def test_singular_matrix_raises():
    A = np.ones((3, 3))
    with pytest.raises(SingularMatrix):
        lu_solve(A, np.ones(3))


def test_inverse_examples():
    assert np.array_equal(inverse(np.eye(4)), np.eye(4))
    swap = np.array([[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(inverse(swap), swap)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_inverse_property(seed):
    A = well_conditioned(np.random.default_rng(seed))
    assert np.abs(A @ inverse(A) - np.eye(15)).max() <= 1e-10


def test_eig_diagonal():
    w, V = eig_symmetric(np.diag([4.0, 2.0, 1.0, 3.0]))
    assert np.array_equal(w, [1.0, 2.0, 3.0, 4.0])
    assert np.array_equal(np.abs(V), np.eye(4)[:, [2, 1, 3, 0]])


def test_eig_dressed_example():
    W, O, O3 = 10.0, 10.0, 5.0
    H = np.diag([0.0, -W, 0.0, 0.0])
    H[0, 2] = H[2, 0] = H[1, 2] = H[2, 1] = -O
    H[2, 3] = H[3, 2] = -O3
    w, _ = eig_symmetric(H)
    assert np.allclose(w, [-18.5078, -5.0, 0.0, 13.5078], atol=1e-4)
    assert np.allclose(w[[0, 3]], [(-10 - np.sqrt(4100)) / 4, (-10 + np.sqrt(4100)) / 4], atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(min_value=1, max_value=8))
def test_eig_residual_and_orthonormality(seed, n):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n))
    H = A + A.T
    w, V = eig_symmetric(H)
    assert np.all(np.diff(w) >= 0)
    assert np.abs(H @ V - V * w).max() <= 1e-11 * max(1.0, np.abs(H).max())
    assert np.abs(V.T @ V - np.eye(n)).max() <= 1e-12
    assert np.allclose(w, np.linalg.eigvalsh(H), atol=1e-11 * max(1.0, np.abs(H).max()))


def test_eig_tiny_offdiagonal_does_not_overflow():
    H = np.array([[1.0, 1e-300], [1e-300, 5.0]])
    with np.errstate(over="raise", invalid="raise"):
        w, _ = eig_symmetric(H)
    assert np.allclose(w, [1.0, 5.0])


def test_eig_rejects_nonsymmetric():
    with pytest.raises(NotSymmetric):
        eig_symmetric(np.array([[1.0, 2.0], [0.0, 1.0]]))


def test_rk4_zero_field_keeps_state():
    y = np.array([1.0, -2.0])
    assert np.array_equal(rk4_step(lambda v: 0 * v, y, 0.1), y)


def test_rk4_exponential_decay():
    y = np.array([1.0])
    for _ in range(1000):
        y = rk4_step(lambda v: -v, y, 1e-3)
    assert abs(y[0] - np.exp(-1.0)) <= 1e-9


def _rk4_error(dt):
    y = np.array([1.0])
    for _ in range(round(1.0 / dt)):
        y = rk4_step(lambda v: -v, y, dt)
    return abs(y[0] - np.exp(-1.0))


def test_rk4_is_fourth_order():
    ratio = _rk4_error(0.1) / _rk4_error(0.05)
    assert 14.0 < ratio < 18.0


def test_rk4_rejects_nonpositive_step():
    with pytest.raises(ValueError):
        rk4_step(lambda v: v, np.ones(1), 0.0)
