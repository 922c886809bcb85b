"""Dressed states of the interaction Hamiltonian and related observables.

At two-photon resonance (``delta_a = delta_b = 0``) the Hamiltonian always
has a zero-eigenvalue state ``|d>``.  With the additional choice
``omega1 = omega2 = omega`` and ``omega3 = w12 / 2`` the remaining three
states have closed forms, labelled ``m``, ``plus`` and ``minus``.  Outside
these regimes states are returned unlabelled (``"generic"``), sorted by
eigenvalue.
"""
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrum
from .linalg import eig_symmetric

LABELS = ("d", "m", "plus", "minus")
DEGENERACY_TOL = 1e-9
NORMALIZATION_TOL = 1e-6


@dataclass(frozen=True, eq=False)
class DressedState:
    """Eigenstate of the interaction Hamiltonian.

    Attributes
    ----------
    eigenvalue : float
        In units of gamma3.
    coeffs : ndarray, shape (4,)
        Real amplitudes on ``|1> .. |4>``, unit norm, first non-zero entry
        positive.
    label : str
        One of ``d``, ``m``, ``plus``, ``minus`` or ``generic``.
    """

    eigenvalue: float
    coeffs: np.ndarray
    label: str = "generic"


@dataclass(frozen=True)
class SymAntisymRecord:
    """Excited-doublet density matrix in the symmetric/antisymmetric basis."""

    rho_ss: float
    rho_aa: float
    rho_sa: complex


def hamiltonian_matrix(params):
    """Real symmetric 4x4 interaction Hamiltonian in the bare basis (units of hbar * gamma3)."""
    da, db, W = params.delta_a, params.delta_b, params.w12
    H = np.diag([da + db, da + db - W, db, 0.0])
    H[0, 2] = H[2, 0] = -params.omega1
    H[1, 2] = H[2, 1] = -params.omega2
    H[2, 3] = H[3, 2] = -params.omega3
    return H


def closed_form_eigenvalues(w12, omega):
    """``{label: eigenvalue}`` for ``omega1 = omega2 = omega``, ``omega3 = w12/2``, zero detunings."""
    root = math.sqrt(w12**2 + 32.0 * (omega**2 + w12**2 / 4.0))
    return {
        "d": 0.0,
        "m": -w12 / 2.0,
        "plus": (-w12 + root) / 4.0,
        "minus": (-w12 - root) / 4.0,
    }


def dark_state(omega1, omega3):
    """Zero-eigenvalue state ``(omega3 |1> - omega1 |4>) / sqrt(omega1^2 + omega3^2)``."""
    norm = math.hypot(omega1, omega3)
    return np.array([omega3, 0.0, 0.0, -omega1]) / norm


def closed_form_states(w12, omega):
    """Unnormalized closed-form amplitude vectors and their printed normalizations.

    Returns
    -------
    dict
        label -> (eigenvalue, amplitudes, normalization).  ``normalization``
        is the printed prefactor; for a consistent closed form it equals
        ``1 / ||amplitudes||``.  Entries that are undefined for the given
        parameters (division by zero) are omitted.
    """
    lam = closed_form_eigenvalues(w12, omega)
    out = {
        "d": (0.0, np.array([w12 / 2.0, 0.0, 0.0, -omega]), 1.0 / math.hypot(omega, w12 / 2.0)),
        "m": (lam["m"], np.array([omega, -omega, w12 / 2.0, w12 / 2.0]),
              1.0 / math.sqrt(2.0 * (omega**2 + w12**2 / 4.0))),
    }
    for label in ("plus", "minus"):
        l = lam[label]
        if w12 + l == 0:
            continue
        vec = np.array([omega, l * omega / (w12 + l), -l, w12 / 2.0])
        norm = 1.0 / math.sqrt(l**2 * (1.0 + omega**2 / (w12 + l) ** 2) + omega**2 + w12**2 / 4.0)
        out[label] = (l, vec, norm)
    return out


def _is_special_regime(params, tol):
    return (abs(params.delta_a) <= tol and abs(params.delta_b) <= tol
            and abs(params.omega1 - params.omega2) <= tol
            and abs(params.omega3 - params.w12 / 2.0) <= tol)


def dressed_states(params):
    """Numerical dressed states with labels where the closed forms apply.

    Returns
    -------
    list of DressedState
        Labelled states come first in the order ``d, m, plus, minus``;
        unlabelled states follow in ascending eigenvalue order.

    Raises
    ------
    DegenerateSpectrum
        If two eigenvalues agree within 1e-9.
    """
    H = hamiltonian_matrix(params)
    w, V = eig_symmetric(H)
    gaps = np.diff(w)
    if gaps.size and gaps.min() < DEGENERACY_TOL:
        raise DegenerateSpectrum(f"eigenvalues {w} have a gap of {gaps.min():.2e}")

    scale = max(np.abs(H).max(), 1.0)
    tol = 1e-9 * scale
    labels = ["generic"] * 4
    if abs(params.delta_a) <= tol and abs(params.delta_b) <= tol:
        k = int(np.argmin(np.abs(w)))
        if abs(w[k]) <= tol:
            labels[k] = "d"
        if _is_special_regime(params, tol):
            expected = closed_form_eigenvalues(params.w12, params.omega1)
            matched = {}
            for label in ("m", "plus", "minus"):
                k = int(np.argmin(np.abs(w - expected[label])))
                if abs(w[k] - expected[label]) <= tol and labels[k] == "generic":
                    matched[k] = label
            if len(matched) == 3:
                for k, label in matched.items():
                    labels[k] = label
            _check_normalizations(params)

    states = [DressedState(float(w[k]), V[:, k].copy(), labels[k]) for k in range(4)]
    rank = {label: i for i, label in enumerate(LABELS)}
    return sorted(states, key=lambda s: (rank.get(s.label, len(LABELS)), s.eigenvalue))


def normalization_mismatch(w12, omega):
    """``{label: |printed normalization * ||amplitudes|| - 1|}`` for the closed forms."""
    return {label: abs(norm * np.linalg.norm(vec) - 1.0)
            for label, (_, vec, norm) in closed_form_states(w12, omega).items()}


def _check_normalizations(params):
    for label, err in normalization_mismatch(params.w12, params.omega1).items():
        if err > NORMALIZATION_TOL:
            warnings.warn(f"closed-form normalization of |{label}> is off by {err:.2e}",
                          RuntimeWarning, stacklevel=3)


def state_matrix(states):
    """4x4 matrix whose columns are the coefficient vectors of ``states``."""
    return np.column_stack([s.coeffs for s in states])


def dressed_populations(rho, states):
    """``<Phi| rho |Phi>`` for each state, in the order given."""
    C = state_matrix(states)
    rho = np.asarray(rho)
    return np.real(np.einsum("ik,ij,jk->k", C, rho, C))


def sym_antisym(rho, params):
    """Populations and coherence of ``rho`` in the ``|s>, |a>`` basis of the excited doublet.

    ``|s> = (sqrt(g1)|1> + sqrt(g2)|2>) / sqrt(g1 + g2)`` and
    ``|a> = (sqrt(g2)|1> - sqrt(g1)|2>) / sqrt(g1 + g2)``.
    """
    g1, g2 = params.gamma1, params.gamma2
    if g1 + g2 <= 0:
        raise ValueError("symmetric/antisymmetric basis needs gamma1 + gamma2 > 0")
    norm = math.sqrt(g1 + g2)
    s = np.array([math.sqrt(g1), math.sqrt(g2)]) / norm
    a = np.array([math.sqrt(g2), -math.sqrt(g1)]) / norm
    exc = np.asarray(rho)[:2, :2]
    return SymAntisymRecord(
        rho_ss=float(np.real(s @ exc @ s)),
        rho_aa=float(np.real(a @ exc @ a)),
        rho_sa=complex(s @ exc @ a),
    )


def transition_rates(states, params):
    """Dressed-state emission rates on the two fluorescence channels.

    With unit dipoles, ``Ra[i, j] = (C1i^2 + C2i^2 + 2 p C1i C2i) * C3j^2``
    for the upper-transition field and ``Rb[i, j] = C3i^2 * C4j^2`` for the
    lower one, where ``i`` is the emitting state and ``j`` the final state,
    both in the order of ``states``.
    """
    C = state_matrix(states)
    c1, c2, c3, c4 = C
    upper = c1**2 + c2**2 + 2.0 * params.p * c1 * c2
    Ra = np.outer(upper, c3**2)
    Rb = np.outer(c3**2, c4**2)
    return Ra, Rb
