"""Incoherent resonance-fluorescence spectra of the two emission channels.

Channel ``a`` is the light scattered on the upper transitions (centred on
the upper driving frequency), channel ``b`` the light from the lower
``3 -> 4`` transition.  Offsets are ``omega - omega_c`` in units of gamma3
and spectra are in units of ``|mu|^2 / gamma3`` with unit dipoles, the two
upper dipoles having overlap ``p``.

:func:`spectrum_a` and :func:`spectrum_b` use the resolvent
``M = (z - L)^-1`` at ``z = i * offset`` together with ``N = L^-1 M``.
:func:`spectrum_oracle` instead integrates the regression equations in the
time domain and Fourier transforms the fluctuating part of the correlation.
"""
import math
from dataclasses import dataclass

import numpy as np

from . import io
from .dynamics import steady_state
from .errors import NotConverged
from .linalg import inverse, norm_inf, rk4_step
from .liouvillian import LiouvillianSystem, build
from .params import N_COMPONENTS, index, pack

CHANNELS = ("a", "b")


@dataclass(frozen=True, eq=False)
class SpectrumSeries:
    offsets: np.ndarray
    values: np.ndarray
    channel: str

    def to_csv(self, path, metadata=None):
        meta = {"channel": self.channel}
        meta.update(metadata or {})
        return io.write_csv(path, {"offset": self.offsets, f"S_{self.channel}": self.values}, meta)


def resolvent(L, z, L_inv=None):
    """``M = (z I - L)^-1`` and ``N = L^-1 M``.

    Parameters
    ----------
    L : ndarray or LiouvillianSystem
    z : complex
        Laplace variable, ``i * offset`` for a spectrum.
    L_inv : ndarray, optional
        Precomputed ``L^-1`` (reused across a frequency grid).
    """
    if isinstance(L, LiouvillianSystem):
        L = L.L
    L = np.asarray(L)
    n = L.shape[0]
    M = inverse(z * np.eye(n) - L)
    if L_inv is None:
        L_inv = inverse(L)
    return M, L_inv @ M


def _steady_and_system(params):
    rho = steady_state(params)
    return rho, build(params)


def _r(rho, m, n):
    return rho[m - 1, n - 1]


def _resolvent_spectrum(params, offsets, terms):
    offsets = np.asarray(offsets, dtype=float)
    rho, system = _steady_and_system(params)
    L_inv = inverse(system.L)
    values = np.empty(offsets.size)
    for i, nu in enumerate(offsets):
        M, N = resolvent(system.L, 1j * nu, L_inv)
        NI = N @ system.I
        values[i] = np.real(terms(M, NI, rho))
    return values


def spectrum_a(params, offsets):
    """Incoherent spectrum of the upper-transition fluorescence."""
    p = params.p

    def terms(M, NI, rho):
        def m(j, k):
            return M[j - 1, k - 1]

        def ni(j):
            return NI[j - 1]

        r = lambda a, b: _r(rho, a, b)  # noqa: E731
        return (
            (m(11, 9) * r(1, 4) + m(11, 3) * r(1, 3) + m(11, 12) * r(1, 2)
             + m(11, 11) * r(1, 1) + ni(11) * r(1, 3))
            + p * (m(12, 9) * r(1, 4) + m(12, 3) * r(1, 3) + m(12, 12) * r(1, 2)
                   + m(12, 11) * r(1, 1) + ni(12) * r(1, 3))
            + p * (m(11, 11) * r(2, 1) + m(11, 9) * r(2, 4) + m(11, 3) * r(2, 3)
                   + m(11, 12) * r(2, 2) + ni(11) * r(2, 3))
            + (m(12, 11) * r(2, 1) + m(12, 9) * r(2, 4) + m(12, 3) * r(2, 3)
               + m(12, 12) * r(2, 2) + ni(12) * r(2, 3))
        )

    return SpectrumSeries(np.asarray(offsets, dtype=float),
                          _resolvent_spectrum(params, offsets, terms), "a")


def spectrum_b(params, offsets):
    """Incoherent spectrum of the lower-transition fluorescence."""

    def terms(M, NI, rho):
        return (M[14, 12] * _r(rho, 3, 1) + M[14, 13] * _r(rho, 3, 2)
                + M[14, 14] * _r(rho, 3, 3) + NI[14] * _r(rho, 3, 4))

    return SpectrumSeries(np.asarray(offsets, dtype=float),
                          _resolvent_spectrum(params, offsets, terms), "b")


def spectrum(params, channel, offsets):
    """Dispatch to :func:`spectrum_a` or :func:`spectrum_b`."""
    if channel == "a":
        return spectrum_a(params, offsets)
    if channel == "b":
        return spectrum_b(params, offsets)
    raise ValueError(f"channel must be 'a' or 'b', got {channel!r}")


def _transition(m, n):
    op = np.zeros((4, 4))
    op[m - 1, n - 1] = 1.0
    return op


def _polarization_terms(params, channel):
    """Cartesian components of the emitting dipole as ``(B, readout)`` pairs.

    ``B`` is the 4x4 raising-side operator at the earlier time and
    ``readout`` the coherence-vector weights of the lowering-side operator at
    the later time, so that the correlation is
    ``sum_x readout_x . U_x(tau)``.
    """
    if channel == "b":
        readout = np.zeros(N_COMPONENTS)
        readout[index(4, 3)] = 1.0
        return [(_transition(4, 3), readout)]
    if channel != "a":
        raise ValueError(f"channel must be 'a' or 'b', got {channel!r}")
    # mu13 along x, mu23 in the x-y plane at overlap p
    mu13 = (1.0, 0.0)
    mu23 = (params.p, math.sqrt(max(0.0, 1.0 - params.p**2)))
    terms = []
    for x in range(2):
        B = mu13[x] * _transition(3, 1) + mu23[x] * _transition(3, 2)
        readout = np.zeros(N_COMPONENTS)
        readout[index(3, 1)] = mu13[x]
        readout[index(3, 2)] = mu23[x]
        terms.append((B, readout))
    return terms


def correlation(params, channel, dt, t_max=None, decay_tol=1e-10):
    """Fluctuating part of the stationary dipole correlation on a uniform grid.

    Integrates the regression equations ``dU/dtau = L U + I <B>`` with RK4
    from ``U(0) = pack(B rho_ss)`` and subtracts the long-time limit
    ``<A><B>``.  Integration stops once the deviation vector has decayed to
    ``decay_tol`` of its initial size (and ``tau >= 20 / min(gamma)``).

    Returns
    -------
    tau : ndarray
    g : ndarray, complex
        ``<A(tau) B(0)> - <A><B>`` at each ``tau``.
    """
    rho, system = _steady_and_system(params)
    psi_ss = pack(rho)
    rates = [g for g in (params.gamma1, params.gamma2, params.gamma3) if g > 0]
    t_min = 20.0 / min(rates)
    if t_max is None:
        t_max = max(1e3 / params.gamma3, 10.0 * t_min)

    cols = []
    readouts = []
    asymptotes = []
    for B, readout in _polarization_terms(params, channel):
        Brho = B @ rho
        c = np.trace(Brho)
        cols.append(np.append(pack(Brho), c))
        readouts.append(readout)
        asymptotes.append(psi_ss * c)
    Y = np.column_stack(cols)
    asym = np.column_stack(asymptotes)
    R = np.array(readouts)

    G = system.augmented()
    P = rk4_step(lambda X: G @ X, np.eye(N_COMPONENTS + 1, dtype=complex), dt)

    # Samples are produced a block at a time from precomputed powers P^j;
    # this is the same RK4 sequence, evaluated without a per-step loop.
    block = 1024
    powers = np.empty((block, N_COMPONENTS + 1, N_COMPONENTS + 1), dtype=complex)
    powers[0] = np.eye(N_COMPONENTS + 1)
    for j in range(1, block):
        powers[j] = P @ powers[j - 1]
    P_block = P @ powers[-1]
    readout = np.einsum("xk,jkl->jxl", R, powers[:, :N_COMPONENTS, :])
    offset = np.einsum("xk,kx->", R, asym)

    dev0 = np.abs(Y[:N_COMPONENTS] - asym).max()
    if dev0 == 0.0:
        return np.array([0.0]), np.zeros(1, dtype=complex)

    samples = []
    n_steps = 0
    while True:
        samples.append(np.einsum("jxl,lx->j", readout, Y) - offset)
        Y = P_block @ Y
        n_steps += block
        tau = n_steps * dt
        remaining = np.abs(Y[:N_COMPONENTS] - asym).max() / dev0
        if tau >= t_min and remaining <= decay_tol:
            break
        if tau >= t_max:
            raise NotConverged(
                f"correlation decayed only to {remaining:.2e} of its initial size by tau = {tau:g}")
    samples.append(np.array([np.einsum("xk,kx->", R, Y[:N_COMPONENTS]) - offset]))
    g = np.concatenate(samples)
    return dt * np.arange(g.size), g


def fourier_half_line(tau, g, offsets, chunk=None):
    """``Re int_0^T exp(-i nu tau) g(tau) dtau`` by the trapezoid rule.

    An endpoint derivative correction (Euler-Maclaurin) is applied at
    ``tau = 0``, with ``g'(0)`` taken from a one-sided second-order
    difference of the samples; ``g`` is assumed negligible at ``T``.
    """
    offsets = np.asarray(offsets, dtype=float)
    if g.size < 3:
        return np.zeros(offsets.size)
    h = tau[1] - tau[0]
    weights = np.full(g.size, h, dtype=float)
    weights[0] = weights[-1] = 0.5 * h
    wg = weights * g

    n = g.size
    if chunk is None:
        chunk = max(256, (1 << 22) // max(1, offsets.size))
    step_phase = np.exp(-1j * np.outer(offsets, h * np.arange(min(chunk, n))))
    total = np.zeros(offsets.size, dtype=complex)
    for start in range(0, n, chunk):
        block = wg[start:start + chunk]
        base = np.exp(-1j * offsets * (start * h))
        total += base * (step_phase[:, :block.size] @ block)

    dg0 = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h)
    slope0 = dg0 - 1j * offsets * g[0]
    total += (h * h / 12.0) * slope0
    return np.real(total)


def oracle_dt(params, offsets):
    """Time step ``0.005 / max(||L||_inf, max |offset|)``."""
    L = build(params).L
    scale = max(norm_inf(L), float(np.abs(np.asarray(offsets)).max(initial=0.0)), 1e-12)
    return 0.005 / scale


def spectrum_oracle(params, channel, offsets, dt=None, decay_tol=1e-10, t_max=None):
    """Incoherent spectrum from the time-domain regression correlation.

    Raises
    ------
    NotConverged
        If the correlation has not decayed by ``t_max``.
    """
    offsets = np.asarray(offsets, dtype=float)
    dt = oracle_dt(params, offsets) if dt is None else dt
    tau, g = correlation(params, channel, dt, t_max=t_max, decay_tol=decay_tol)
    return SpectrumSeries(offsets, fourier_half_line(tau, g, offsets), channel)
