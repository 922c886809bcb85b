"""Small dense linear-algebra kernel.

The systems here are at most 15x15, so everything is plain row-operation
numpy code: LU with partial pivoting, cyclic Jacobi for real symmetric
eigenproblems and a classical Runge-Kutta step.
"""
import numpy as np

from .errors import NotSymmetric, SingularMatrix

SINGULAR_RTOL = 1e-14


def norm_inf(A):
    """Maximum absolute row sum (the induced infinity norm)."""
    A = np.atleast_2d(np.asarray(A))
    return float(np.abs(A).sum(axis=1).max())


def lu_factor(A, rtol=SINGULAR_RTOL):
    """LU factorization with partial pivoting.

    Parameters
    ----------
    A : (n, n) array_like
        Square matrix, real or complex.
    rtol : float
        A pivot with magnitude below ``rtol * ||A||_inf`` is treated as zero.

    Returns
    -------
    lu : (n, n) ndarray
        Unit-lower factor below the diagonal, upper factor on and above it.
    perm : (n,) ndarray of int
        Row permutation, ``A[perm] = L @ U``.

    Raises
    ------
    SingularMatrix
        If a pivot falls below the threshold.
    """
    A = np.asarray(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    n = A.shape[0]
    lu = A.astype(np.result_type(A.dtype, float), copy=True)
    perm = np.arange(n)
    threshold = rtol * norm_inf(A)
    for k in range(n):
        pivot_row = k + int(np.argmax(np.abs(lu[k:, k])))
        pivot = lu[pivot_row, k]
        if abs(pivot) < threshold or pivot == 0:
            raise SingularMatrix(
                f"pivot {abs(pivot):.3e} in column {k + 1} is below "
                f"{rtol:g} * ||A||_inf = {threshold:.3e}")
        if pivot_row != k:
            lu[[k, pivot_row]] = lu[[pivot_row, k]]
            perm[[k, pivot_row]] = perm[[pivot_row, k]]
        lu[k + 1:, k] /= pivot
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm


def lu_substitute(lu, perm, b):
    """Solve ``A x = b`` given the factors from :func:`lu_factor`.

    ``b`` may be a vector or a matrix of right-hand sides.
    """
    b = np.asarray(b)
    x = b[perm].astype(np.result_type(lu.dtype, b.dtype), copy=True)
    n = lu.shape[0]
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - lu[i, i + 1:] @ x[i + 1:]) / lu[i, i]
    return x


def lu_solve(A, b, rtol=SINGULAR_RTOL):
    """Solve ``A x = b`` by LU with partial pivoting."""
    A = np.asarray(A)
    b = np.asarray(b)
    if b.shape[0] != A.shape[0]:
        raise ValueError(f"shape mismatch: A is {A.shape}, b is {b.shape}")
    lu, perm = lu_factor(A, rtol)
    return lu_substitute(lu, perm, b)


def inverse(A, rtol=SINGULAR_RTOL):
    """Matrix inverse through LU; raises SingularMatrix like :func:`lu_factor`."""
    A = np.asarray(A)
    lu, perm = lu_factor(A, rtol)
    return lu_substitute(lu, perm, np.eye(A.shape[0], dtype=lu.dtype))


def eig_symmetric(H, sym_tol=1e-12, max_sweeps=100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    H : (n, n) array_like
        Real symmetric matrix.
    sym_tol : float
        Allowed ``||H - H^T||_inf`` before NotSymmetric is raised.

    Returns
    -------
    w : (n,) ndarray
        Eigenvalues in ascending order.
    V : (n, n) ndarray
        Orthonormal eigenvectors as columns, ``H @ V[:, k] = w[k] * V[:, k]``.
        Each column is signed so that its first non-negligible entry is
        positive.
    """
    H = np.asarray(H)
    if np.iscomplexobj(H):
        if np.abs(H.imag).max(initial=0.0) > sym_tol:
            raise NotSymmetric("matrix has a non-zero imaginary part")
        H = H.real
    H = H.astype(float)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if norm_inf(H - H.T) > sym_tol:
        raise NotSymmetric(f"||H - H^T||_inf = {norm_inf(H - H.T):.3e} exceeds {sym_tol:g}")

    n = H.shape[0]
    A = 0.5 * (H + H.T)
    V = np.eye(n)
    scale = max(np.abs(A).max(initial=0.0), np.finfo(float).tiny)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(A, -1) ** 2))
        if off <= 1e-17 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif abs(theta) > 1e150:
                    # theta^2 would overflow; t -> 1 / (2 theta)
                    t = 0.5 / theta
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) Givens rotation
                ap = A[:, p].copy()
                aq = A[:, q].copy()
                A[:, p] = c * ap - s * aq
                A[:, q] = s * ap + c * aq
                ap = A[p, :].copy()
                aq = A[q, :].copy()
                A[p, :] = c * ap - s * aq
                A[q, :] = s * ap + c * aq
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    V = V[:, order]
    for k in range(n):
        lead = np.flatnonzero(np.abs(V[:, k]) > 1e-12)
        if lead.size and V[lead[0], k] < 0:
            V[:, k] = -V[:, k]
    return w, V


def rk4_step(f, y, dt):
    """One classical fourth-order Runge-Kutta step of ``dy/dt = f(y)``.

    ``y`` may be any array shape that ``f`` accepts, e.g. a matrix whose
    columns are propagated together.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    k1 = f(y)
    k2 = f(y + 0.5 * dt * k1)
    k3 = f(y + 0.5 * dt * k2)
    k4 = f(y + dt * k3)
    return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
