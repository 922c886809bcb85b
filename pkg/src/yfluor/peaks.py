"""Deterministic peak finding and line-shape measures for sampled curves."""
import numpy as np


def smooth3(y):
    """Three-point moving average; the two end samples are left unchanged.

    NaN samples (gaps) propagate into their neighbours' averages.
    """
    y = np.asarray(y, dtype=float)
    out = y.copy()
    if y.size >= 3:
        out[1:-1] = (y[:-2] + y[1:-1] + y[2:]) / 3.0
    return out


def local_maxima(y, smooth=True):
    """Indices of strict interior local maxima, after :func:`smooth3` by default."""
    ys = smooth3(y) if smooth else np.asarray(y, dtype=float)
    mid = ys[1:-1]
    with np.errstate(invalid="ignore"):
        mask = (mid > ys[:-2]) & (mid > ys[2:])
    return np.flatnonzero(mask) + 1


def nearest_peak(x, y, target=0.0, smooth=True):
    """Index of the local maximum closest to ``target`` on the x axis."""
    idx = local_maxima(y, smooth=smooth)
    if idx.size == 0:
        raise ValueError("curve has no interior local maximum")
    x = np.asarray(x, dtype=float)
    return int(idx[np.argmin(np.abs(x[idx] - target))])


def fwhm(x, y, target=0.0):
    """Full width at half maximum of the peak nearest ``target``.

    The half-height crossings on either side are located by linear
    interpolation of the raw (unsmoothed) samples.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    i0 = nearest_peak(x, y, target)
    half = 0.5 * y[i0]

    def crossing(step):
        i = i0
        while 0 <= i + step < y.size and y[i + step] > half:
            i += step
        j = i + step
        if not 0 <= j < y.size:
            raise ValueError("peak does not fall to half height inside the grid")
        # interpolate between samples i (above) and j (at or below)
        return x[i] + (half - y[i]) * (x[j] - x[i]) / (y[j] - y[i])

    return crossing(1) - crossing(-1)


def band_integral(x, y, lo, hi):
    """Trapezoidal integral of ``y`` over ``lo <= |x| <= hi`` (both sides of zero)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    total = 0.0
    for sign in (1.0, -1.0):
        mask = (sign * x >= lo) & (sign * x <= hi)
        xs, ys = x[mask], y[mask]
        if xs.size > 1:
            total += abs(np.trapezoid(ys, xs))
    return total
