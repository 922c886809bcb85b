"""Equations of motion of the driven Y-type atom in coherence-vector form.

Two code paths produce the same dynamics ``dpsi/dt = L @ psi + I``:

* :func:`build` assembles the 15x15 matrix ``L`` and inhomogeneous vector
  ``I`` entry by entry for the nine independent equations and fills the six
  conjugate rows from the index involution.
* :func:`derivative` evaluates the right-hand side directly from density
  matrix elements, conjugate equations written out by hand.

They are kept independent so that each can serve as the check on the other.
"""
import csv
from dataclasses import dataclass

import numpy as np

from .params import CONJUGATE, N_COMPONENTS, AtomParams, index, validate


@dataclass(frozen=True, eq=False)
class LiouvillianSystem:
    """Generator ``L`` and inhomogeneous term ``I`` for a parameter set.

    ``I`` is non-zero only in components 9 (``i * omega3``) and 15
    (``-i * omega3``), the remnant of eliminating ``rho44`` from the
    ``rho34`` and ``rho43`` equations.
    """

    L: np.ndarray
    I: np.ndarray
    params: AtomParams

    def rhs(self, psi):
        """``L @ psi + I``; ``psi`` may carry trailing batch axes."""
        psi = np.asarray(psi)
        inhom = self.I.reshape((N_COMPONENTS,) + (1,) * (psi.ndim - 1))
        return self.L @ psi + inhom

    def augmented(self):
        """16x16 homogeneous generator ``[[L, I], [0, 0]]`` acting on ``(psi, 1)``."""
        G = np.zeros((N_COMPONENTS + 1, N_COMPONENTS + 1), dtype=complex)
        G[:N_COMPONENTS, :N_COMPONENTS] = self.L
        G[:N_COMPONENTS, N_COMPONENTS] = self.I
        return G

    def to_csv(self, L_path, I_path):
        """Write non-zero entries as ``row, col, re, im`` with 1-based indices."""
        with open(L_path, "w", newline="") as fh:
            _write_entries(fh, self.L)
        with open(I_path, "w", newline="") as fh:
            _write_entries(fh, self.I.reshape(-1, 1))


def _write_entries(fh, M):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["row", "col", "re", "im"])
    for (j, k), value in np.ndenumerate(M):
        if value != 0:
            writer.writerow([j + 1, k + 1, repr(float(value.real)), repr(float(value.imag))])


def build(params):
    """Assemble ``L`` and ``I`` for ``params``.

    Raises the validation errors of :func:`yfluor.params.validate`.
    """
    validate(params)
    g1, g2, g3 = params.gamma1, params.gamma2, params.gamma3
    W, da, db = params.w12, params.delta_a, params.delta_b
    O1, O2, O3 = params.omega1, params.omega2, params.omega3
    q = params.cross_rate

    L = np.zeros((N_COMPONENTS, N_COMPONENTS), dtype=complex)

    def add(target, source, coeff):
        L[index(*target), index(*source)] += coeff

    # rho11
    add((1, 1), (1, 1), -2 * g1)
    add((1, 1), (3, 1), 1j * O1)
    add((1, 1), (1, 3), -1j * O1)
    add((1, 1), (1, 2), -q)
    add((1, 1), (2, 1), -q)
    # rho22
    add((2, 2), (2, 2), -2 * g2)
    add((2, 2), (3, 2), 1j * O2)
    add((2, 2), (2, 3), -1j * O2)
    add((2, 2), (1, 2), -q)
    add((2, 2), (2, 1), -q)
    # rho33
    add((3, 3), (1, 1), 2 * g1)
    add((3, 3), (2, 2), 2 * g2)
    add((3, 3), (3, 3), -2 * g3)
    add((3, 3), (1, 3), 1j * O1)
    add((3, 3), (3, 1), -1j * O1)
    add((3, 3), (2, 3), 1j * O2)
    add((3, 3), (3, 2), -1j * O2)
    add((3, 3), (4, 3), 1j * O3)
    add((3, 3), (3, 4), -1j * O3)
    add((3, 3), (1, 2), 2 * q)
    add((3, 3), (2, 1), 2 * q)
    # rho12
    add((1, 2), (1, 2), -(g1 + g2 + 1j * W))
    add((1, 2), (3, 2), 1j * O1)
    add((1, 2), (1, 3), -1j * O2)
    add((1, 2), (1, 1), -q)
    add((1, 2), (2, 2), -q)
    # rho13
    add((1, 3), (1, 3), -(g1 + g3 + 1j * da))
    add((1, 3), (3, 3), 1j * O1)
    add((1, 3), (1, 1), -1j * O1)
    add((1, 3), (1, 2), -1j * O2)
    add((1, 3), (1, 4), -1j * O3)
    add((1, 3), (2, 3), -q)
    # rho23
    add((2, 3), (2, 3), -(g2 + g3 + 1j * (da - W)))
    add((2, 3), (3, 3), 1j * O2)
    add((2, 3), (2, 2), -1j * O2)
    add((2, 3), (2, 1), -1j * O1)
    add((2, 3), (2, 4), -1j * O3)
    add((2, 3), (1, 3), -q)
    # rho34, with rho44 = 1 - rho11 - rho22 - rho33 in i*O3*(rho44 - rho33)
    add((3, 4), (3, 4), -(g3 + 1j * db))
    add((3, 4), (1, 1), -1j * O3)
    add((3, 4), (2, 2), -1j * O3)
    add((3, 4), (3, 3), -2j * O3)
    add((3, 4), (1, 4), 1j * O1)
    add((3, 4), (2, 4), 1j * O2)
    # rho14
    add((1, 4), (1, 4), -(g1 + 1j * (da + db)))
    add((1, 4), (3, 4), 1j * O1)
    add((1, 4), (1, 3), -1j * O3)
    add((1, 4), (2, 4), -q)
    # rho24
    add((2, 4), (2, 4), -(g2 + 1j * (da + db - W)))
    add((2, 4), (3, 4), 1j * O2)
    add((2, 4), (2, 3), -1j * O3)
    add((2, 4), (1, 4), -q)

    # rows for rho_nm are the complex conjugates of rows for rho_mn
    for j in range(3, 9):
        L[CONJUGATE[j], CONJUGATE] = np.conj(L[j, :])

    I = np.zeros(N_COMPONENTS, dtype=complex)
    I[index(3, 4)] = 1j * O3
    I[index(4, 3)] = -1j * O3
    return LiouvillianSystem(L=L, I=I, params=params)


def derivative(params, psi):
    """Time derivative of the coherence vector, evaluated directly.

    Parameters
    ----------
    params : AtomParams
    psi : (15, ...) array_like
        Coherence vector(s); extra trailing axes are broadcast.

    Returns
    -------
    ndarray
        ``dpsi/dt`` with the same shape as ``psi``.
    """
    g1, g2, g3 = params.gamma1, params.gamma2, params.gamma3
    W, da, db = params.w12, params.delta_a, params.delta_b
    O1, O2, O3 = params.omega1, params.omega2, params.omega3
    q = params.cross_rate

    psi = np.asarray(psi, dtype=complex)

    def r(m, n):
        return psi[index(m, n)]

    r44 = 1.0 - r(1, 1) - r(2, 2) - r(3, 3)

    d = {}
    d[1, 1] = -2 * g1 * r(1, 1) + 1j * O1 * (r(3, 1) - r(1, 3)) - q * (r(1, 2) + r(2, 1))
    d[2, 2] = -2 * g2 * r(2, 2) + 1j * O2 * (r(3, 2) - r(2, 3)) - q * (r(1, 2) + r(2, 1))
    d[3, 3] = (2 * g1 * r(1, 1) + 2 * g2 * r(2, 2) - 2 * g3 * r(3, 3)
               + 1j * O1 * (r(1, 3) - r(3, 1))
               + 1j * O2 * (r(2, 3) - r(3, 2))
               + 1j * O3 * (r(4, 3) - r(3, 4))
               + 2 * q * (r(1, 2) + r(2, 1)))

    d[1, 2] = (-(g1 + g2 + 1j * W) * r(1, 2) + 1j * O1 * r(3, 2) - 1j * O2 * r(1, 3)
               - q * (r(1, 1) + r(2, 2)))
    d[1, 3] = (-(g1 + g3 + 1j * da) * r(1, 3) + 1j * O1 * (r(3, 3) - r(1, 1))
               - 1j * O2 * r(1, 2) - 1j * O3 * r(1, 4) - q * r(2, 3))
    d[2, 3] = (-(g2 + g3 + 1j * (da - W)) * r(2, 3) + 1j * O2 * (r(3, 3) - r(2, 2))
               - 1j * O1 * r(2, 1) - 1j * O3 * r(2, 4) - q * r(1, 3))
    d[3, 4] = (-(g3 + 1j * db) * r(3, 4) + 1j * O3 * (r44 - r(3, 3))
               + 1j * O1 * r(1, 4) + 1j * O2 * r(2, 4))
    d[1, 4] = (-(g1 + 1j * (da + db)) * r(1, 4) + 1j * O1 * r(3, 4)
               - 1j * O3 * r(1, 3) - q * r(2, 4))
    d[2, 4] = (-(g2 + 1j * (da + db - W)) * r(2, 4) + 1j * O2 * r(3, 4)
               - 1j * O3 * r(2, 3) - q * r(1, 4))

    # conjugate equations: i -> -i and rho_mn -> rho_nm
    d[2, 1] = (-(g1 + g2 - 1j * W) * r(2, 1) - 1j * O1 * r(2, 3) + 1j * O2 * r(3, 1)
               - q * (r(1, 1) + r(2, 2)))
    d[3, 1] = (-(g1 + g3 - 1j * da) * r(3, 1) - 1j * O1 * (r(3, 3) - r(1, 1))
               + 1j * O2 * r(2, 1) + 1j * O3 * r(4, 1) - q * r(3, 2))
    d[3, 2] = (-(g2 + g3 - 1j * (da - W)) * r(3, 2) - 1j * O2 * (r(3, 3) - r(2, 2))
               + 1j * O1 * r(1, 2) + 1j * O3 * r(4, 2) - q * r(3, 1))
    d[4, 3] = (-(g3 - 1j * db) * r(4, 3) - 1j * O3 * (r44 - r(3, 3))
               - 1j * O1 * r(4, 1) - 1j * O2 * r(4, 2))
    d[4, 1] = (-(g1 - 1j * (da + db)) * r(4, 1) - 1j * O1 * r(4, 3)
               + 1j * O3 * r(3, 1) - q * r(4, 2))
    d[4, 2] = (-(g2 - 1j * (da + db - W)) * r(4, 2) - 1j * O2 * r(4, 3)
               + 1j * O3 * r(3, 2) - q * r(4, 1))

    out = np.empty_like(psi)
    for mn, value in d.items():
        out[index(*mn)] = value
    return out


def ground_rate(params, psi):
    """``d rho44 / dt`` reconstructed from the eliminated equation."""
    psi = np.asarray(psi, dtype=complex)
    return (2 * params.gamma3 * psi[index(3, 3)]
            + 1j * params.omega3 * (psi[index(3, 4)] - psi[index(4, 3)]))
