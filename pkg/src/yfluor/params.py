"""Atom parameters, bare-basis density matrices and the coherence-vector map.

Levels are numbered 1..4 (``|1>``, ``|2>`` excited doublet, ``|3>``
intermediate, ``|4>`` ground).  A density matrix is stored as a 4x4 complex
numpy array indexed ``rho[m - 1, n - 1]``.  The coherence vector packs the
15 independent elements in the order given by :data:`COMPONENTS`; ``rho44``
is never stored and is always ``1 - rho11 - rho22 - rho33``.

=========  ======  =========  ======  =========  ======
component  rho     component  rho     component  rho
=========  ======  =========  ======  =========  ======
1          rho11   6          rho23   11         rho31
2          rho22   7          rho14   12         rho32
3          rho33   8          rho24   13         rho41
4          rho12   9          rho34   14         rho42
5          rho13   10         rho21   15         rho43
=========  ======  =========  ======  =========  ======

Component numbers in this table (and in error messages) are 1-based; the
arrays themselves are 0-based, so component ``k`` lives at ``psi[k - 1]``.
"""
import math
from dataclasses import dataclass, fields, replace

import numpy as np

from .errors import InvalidP, InvalidRate

# (m, n) of rho for coherence-vector components 1..15
COMPONENTS = (
    (1, 1), (2, 2), (3, 3),
    (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
    (2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3),
)
_INDEX = {mn: k for k, mn in enumerate(COMPONENTS)}

# 0-based involution mapping component rho_mn to rho_nm
CONJUGATE = np.array([_INDEX[(n, m)] for (m, n) in COMPONENTS])

N_LEVELS = 4
N_COMPONENTS = 15


def index(m, n):
    """0-based position of ``rho_mn`` in the coherence vector.

    Raises KeyError for ``(4, 4)``, which is eliminated by the trace condition.
    """
    try:
        return _INDEX[(m, n)]
    except KeyError:
        raise KeyError(f"rho{m}{n} is not a coherence-vector component") from None


@dataclass(frozen=True)
class AtomParams:
    """Rates, detunings and Rabi frequencies of the driven Y-type atom.

    All quantities are angular frequencies in units of ``gamma3``.  The decay
    rates are half-rates: level ``|1>`` decays to ``|3>`` at ``2 * gamma1``.

    Attributes
    ----------
    gamma1, gamma2 : float
        Half decay rates of ``|1> -> |3>`` and ``|2> -> |3>``.
    gamma3 : float
        Half decay rate of ``|3> -> |4>``.
    w12 : float
        Splitting of the excited doublet.
    delta_a, delta_b : float
        Detunings of the upper (``omega_13 - omega_a``) and lower
        (``omega_34 - omega_b``) driving fields.
    omega1, omega2, omega3 : float
        Real Rabi frequencies on ``1-3``, ``2-3`` and ``3-4``.
    p : float
        Normalized dot product of the two upper-transition dipoles.
    """

    gamma1: float = 0.0
    gamma2: float = 0.0
    gamma3: float = 1.0
    w12: float = 0.0
    delta_a: float = 0.0
    delta_b: float = 0.0
    omega1: float = 0.0
    omega2: float = 0.0
    omega3: float = 0.0
    p: float = 0.0

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, float(getattr(self, f.name)))
        validate(self)

    def replace(self, **changes):
        return replace(self, **changes)

    def scaled(self, c):
        """All rates and frequencies multiplied by ``c``; ``p`` unchanged."""
        return replace(self, **{name: c * getattr(self, name)
                                for name in FREQUENCY_FIELDS})

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @property
    def cross_rate(self):
        """Interference coupling ``p * sqrt(gamma1 * gamma2)``."""
        return self.p * math.sqrt(self.gamma1 * self.gamma2)

    def frequency_scale(self):
        """Largest magnitude among all rates and frequencies."""
        return max(abs(getattr(self, name)) for name in FREQUENCY_FIELDS)


FREQUENCY_FIELDS = ("gamma1", "gamma2", "gamma3", "w12", "delta_a", "delta_b",
                    "omega1", "omega2", "omega3")


def validate(params):
    """Raise if ``params`` violates the physical constraints, else return None."""
    for name in FREQUENCY_FIELDS + ("p",):
        value = getattr(params, name)
        if not math.isfinite(value):
            raise InvalidRate(f"{name} must be finite, got {value!r}")
    if abs(params.p) > 1.0:
        raise InvalidP(f"p must satisfy |p| <= 1, got p = {params.p!r}")
    for name in ("gamma1", "gamma2"):
        if getattr(params, name) < 0.0:
            raise InvalidRate(f"{name} must be non-negative, got {getattr(params, name)!r}")
    if params.gamma3 <= 0.0:
        raise InvalidRate(f"gamma3 must be positive, got {params.gamma3!r}")


def pack(rho):
    """Coherence vector (15 complex components) of a 4x4 density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[:2] != (N_LEVELS, N_LEVELS):
        raise ValueError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    rows = [m - 1 for m, _ in COMPONENTS]
    cols = [n - 1 for _, n in COMPONENTS]
    return rho[rows, cols]


def unpack(psi):
    """Density matrix from a coherence vector, with ``rho44 = 1 - rho11 - rho22 - rho33``."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape[0] != N_COMPONENTS:
        raise ValueError(f"expected 15 components, got shape {psi.shape}")
    rho = np.zeros((N_LEVELS, N_LEVELS) + psi.shape[1:], dtype=complex)
    for k, (m, n) in enumerate(COMPONENTS):
        rho[m - 1, n - 1] = psi[k]
    rho[3, 3] = 1.0 - psi[0] - psi[1] - psi[2]
    return rho


def hermitize(rho):
    """``(rho + rho^dagger) / 2``; exact identity on an already Hermitian matrix."""
    rho = np.asarray(rho, dtype=complex)
    return 0.5 * (rho + rho.conj().T)


def projector(state):
    """Pure-state density matrix ``|state><state|``.

    ``state`` is either a level number 1..4 or an amplitude vector over the
    bare basis (normalized here).
    """
    if np.isscalar(state):
        k = int(state)
        if not 1 <= k <= N_LEVELS:
            raise ValueError(f"level must be in 1..4, got {k}")
        vec = np.zeros(N_LEVELS, dtype=complex)
        vec[k - 1] = 1.0
    else:
        vec = np.asarray(state, dtype=complex)
        vec = vec / np.linalg.norm(vec)
    return np.outer(vec, vec.conj())


def populations(rho):
    """Real diagonal ``(rho11, rho22, rho33, rho44)``."""
    return np.real(np.diagonal(np.asarray(rho)))


def is_physical(rho, tol=1e-8):
    """True when ``rho`` is Hermitian, unit trace and positive semidefinite within ``tol``."""
    rho = np.asarray(rho, dtype=complex)
    if not np.allclose(rho, rho.conj().T, rtol=0.0, atol=tol):
        return False
    if abs(np.trace(rho) - 1.0) > tol:
        return False
    eigs = np.linalg.eigvalsh(hermitize(rho))
    return bool(eigs.min() >= -tol and eigs.max() <= 1.0 + tol)
