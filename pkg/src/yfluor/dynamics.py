"""Steady states, time propagation and parameter sweeps."""
import math
from dataclasses import dataclass, field

import numpy as np

from . import io
from .errors import InvalidParams, NotConverged, SingularLiouvillian, SingularMatrix, StepTooLarge
from .linalg import lu_solve, rk4_step
from .liouvillian import build
from .params import N_COMPONENTS, AtomParams, hermitize, pack, unpack

POPULATION_SLACK = 1e-6


def steady_state(params):
    """Stationary density matrix ``unpack(-L^{-1} I)``.

    Raises
    ------
    SingularLiouvillian
        When ``L`` is singular and the stationary state is not unique, e.g.
        degenerate excited levels (``w12 = 0``) with ``p = 1``.
    """
    system = build(params)
    try:
        psi = -lu_solve(system.L, system.I)
    except SingularMatrix as exc:
        raise SingularLiouvillian(f"no unique steady state for {params}: {exc}") from exc
    return hermitize(unpack(psi))


def default_dt(params):
    """Recommended RK4 step, ``0.01 / max(|rates|, |frequencies|)``."""
    return 0.01 / max(params.frequency_scale(), 1e-12)


def step_map(system, dt):
    """Augmented 16x16 matrix of one RK4 step acting on ``(psi, 1)``.

    Because the equations are affine, one RK4 step is the affine map this
    matrix represents; composing it reproduces repeated :func:`rk4_step`
    calls up to rounding.
    """
    G = system.augmented()
    return rk4_step(lambda Y: G @ Y, np.eye(N_COMPONENTS + 1, dtype=complex), dt)


def _augment(rho):
    return np.append(pack(rho), 1.0 + 0j)


def _check_populations(y, t):
    pops = y[:3].real
    p44 = 1.0 - pops.sum()
    lo = min(pops.min(), p44)
    hi = max(pops.max(), p44)
    if lo < -POPULATION_SLACK or hi > 1.0 + POPULATION_SLACK:
        raise StepTooLarge(
            f"population left [0, 1] at t = {t:.6g} (range {lo:.3e} .. {hi:.3e}); reduce dt")


def propagate(params, rho0, t_final, dt=None):
    """Integrate ``dpsi/dt = L psi + I`` from ``rho0`` to ``t_final`` with RK4.

    The step is shortened slightly so that an integer number of steps lands
    on ``t_final``.  Populations are checked after every step.

    Raises
    ------
    StepTooLarge
        If any population leaves ``[-1e-6, 1 + 1e-6]``.
    """
    if t_final < 0:
        raise ValueError(f"t_final must be non-negative, got {t_final!r}")
    y = _augment(rho0)
    if t_final == 0:
        return unpack(y[:N_COMPONENTS])
    dt = default_dt(params) if dt is None else dt
    n_steps = max(1, math.ceil(t_final / dt - 1e-9))
    h = t_final / n_steps
    P = step_map(build(params), h)
    for k in range(n_steps):
        y = P @ y
        _check_populations(y, (k + 1) * h)
    return unpack(y[:N_COMPONENTS])


def propagate_to_steady(params, rho0=None, dt=None, tol=1e-10, t_max=1e3):
    """Propagate until the state stops changing.

    Steps of length ``1/gamma3`` are taken (each made of RK4 substeps of at
    most ``dt``) until ``||psi(t + 1) - psi(t)||_inf < tol``.

    Returns
    -------
    rho : ndarray
        Final density matrix.
    t : float
        Time reached.

    Raises
    ------
    NotConverged
        If ``t_max`` is reached first.
    """
    rho0 = np.diag([0, 0, 0, 1]).astype(complex) if rho0 is None else rho0
    dt = default_dt(params) if dt is None else dt
    unit = 1.0 / params.gamma3
    n_sub = max(1, math.ceil(unit / dt - 1e-9))
    U = np.linalg.matrix_power(step_map(build(params), unit / n_sub), n_sub)
    y = _augment(rho0)
    t = 0.0
    while t < t_max:
        y_next = U @ y
        t += unit
        _check_populations(y_next, t)
        change = np.abs(y_next - y).max()
        y = y_next
        if change < tol:
            return unpack(y[:N_COMPONENTS]), t
    raise NotConverged(f"state still changing by {change:.3e} per unit time at t = {t:g}")


# sweep axis -> AtomParams fields set to the swept value
AXES = {
    "delta_a": ("delta_a",),
    "delta_b": ("delta_b",),
    "omega_all": ("omega1", "omega2", "omega3"),
    "omega12": ("omega1", "omega2"),
    "omega1": ("omega1",),
    "omega2": ("omega2",),
    "omega3": ("omega3",),
    "p": ("p",),
    "w12": ("w12",),
}


def params_at(params, axis, value):
    """``params`` with the fields of ``axis`` set to ``value``."""
    try:
        names = AXES[axis]
    except KeyError:
        raise ValueError(f"unknown sweep axis {axis!r}; choose from {sorted(AXES)}") from None
    return params.replace(**{name: value for name in names})


@dataclass
class SweepSeries:
    """Steady states along one parameter axis.

    Attributes
    ----------
    axis : str
        Swept parameter, a key of :data:`AXES`.
    grid : ndarray
        Axis values in units of gamma3.
    rho : ndarray, shape (n, 4, 4)
        Steady-state density matrices; all-NaN where the solve failed.
    errors : dict
        Grid index -> error message for the failed points.
    params : AtomParams
        Base parameters (the swept fields are overridden per point).
    """

    axis: str
    grid: np.ndarray
    rho: np.ndarray
    params: object
    errors: dict = field(default_factory=dict)

    @property
    def populations(self):
        """``(n, 4)`` array of ``rho11 .. rho44``."""
        return np.real(np.diagonal(self.rho, axis1=1, axis2=2))

    @property
    def ok(self):
        return ~np.isnan(self.populations[:, 0])

    def columns(self):
        pops = self.populations
        cols = {self.axis: self.grid}
        for k in range(4):
            cols[f"rho{k + 1}{k + 1}"] = pops[:, k]
        return cols

    def to_csv(self, path, metadata=None, extra=None):
        cols = self.columns()
        cols.update(extra or {})
        meta = {"axis": self.axis}
        meta.update(self.params.as_dict())
        meta.update(metadata or {})
        return io.write_csv(path, cols, meta)


def sweep(params, axis, grid):
    """One steady-state solve per grid value; failures are recorded, not raised."""
    grid = np.asarray(grid, dtype=float)
    if axis not in AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; choose from {sorted(AXES)}")
    rho = np.full((grid.size, 4, 4), np.nan, dtype=complex)
    errors = {}
    for i, value in enumerate(grid):
        try:
            rho[i] = steady_state(params_at(params, axis, value))
        except (SingularLiouvillian, InvalidParams) as exc:
            errors[i] = f"{type(exc).__name__}: {exc}"
    return SweepSeries(axis=axis, grid=grid, rho=rho, params=params, errors=errors)


def analytic_rho11(delta_a, omega, p):
    """High-intensity closed form for ``rho11`` with ``gamma1 = gamma2 = gamma3``.

    Valid for ``omega >> w12`` and all three Rabi frequencies equal to
    ``omega``; ``delta_a`` and ``omega`` are in units of the common decay
    rate.  Only ``p = 0`` and ``p = 1`` have closed forms.
    """
    d = np.asarray(delta_a, dtype=float)
    O = float(omega)
    if O <= 0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if p == 1:
        num = O**4 * d**6 + 12 * O**6 * d**4 + 14 * O**8 * d**2 + 21 * O**10
        den = 2 * O**2 * d**8 + 16 * O**4 * d**6 + 52 * O**6 * d**4 + 2 * O**8 * d**2 + 84 * O**10
    elif p == 0:
        num = 4 * O**4 * d**6 + 4 * O**8 * d**4 + 40 * O**10 * d**2 + 160 * O**10
        den = (8 * O**2 * d**8 + 8 * O**6 * d**6 + 64 * O**8 * d**4
               + 240 * O**10 * d**2 + 960 * O**10)
    else:
        raise ValueError(f"closed form exists only for p in {{0, 1}}, got {p!r}")
    out = num / den
    return float(out) if out.ndim == 0 else out


def analytic_deviation(grid, omega, p, gamma=1.0, w12=0.2):
    """Largest ``|analytic - numerical|`` of ``rho11`` over a detuning grid.

    A diagnostic of how well the closed form tracks the full steady state
    away from resonance.
    """
    base = AtomParams(gamma1=gamma, gamma2=gamma, gamma3=gamma, w12=w12,
                      omega1=omega, omega2=omega, omega3=omega, p=p)
    series = sweep(base, "delta_a", grid)
    numeric = series.populations[:, 0]
    closed = analytic_rho11(np.asarray(grid) / gamma, omega / gamma, p)
    return float(np.nanmax(np.abs(closed - numeric)))

