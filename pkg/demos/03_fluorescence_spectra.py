# %% [markdown]
# Incoherent fluorescence spectra of the two channels
#
# Channel a is light from the upper transitions, channel b from 3 -> 4.  The
# spectra come from the resolvent of the Liouvillian; an independent
# time-domain calculation (regression equations integrated with RK4, then a
# Fourier transform) is run alongside as a check.

# %%
import numpy as np

from yfluor import spectrum_a, spectrum_b, spectrum_oracle
from yfluor.peaks import band_integral, fwhm, local_maxima
from yfluor.presets import get

offsets = np.linspace(-30, 30, 2001)
base = get("5a").params

# %%
# Interference narrows the central line of channel a
for p in (0.0, 1.0):
    s = spectrum_a(base.replace(p=p), offsets).values
    print(f"channel a, p = {p:g}: central FWHM = {fwhm(offsets, s):.3f}, "
          f"peaks at {offsets[local_maxima(s)].round(2)}")

# %%
# ... and moves channel-b intensity from the outer to the inner sidebands
for p in (0.0, 1.0):
    s = spectrum_b(base.replace(p=p), offsets).values
    print(f"channel b, p = {p:g}: inner band {band_integral(offsets, s, 2.5, 7.5):.4f}, "
          f"outer band {band_integral(offsets, s, 10, 25):.4f}")

# %%
# Time-domain check on a coarser grid
coarse = offsets[::20]
for channel, fn in (("a", spectrum_a), ("b", spectrum_b)):
    ref = fn(base.replace(p=1.0), coarse).values
    check = spectrum_oracle(base.replace(p=1.0), channel, coarse).values
    print(f"channel {channel}: max relative difference {np.max(np.abs(check - ref) / ref):.1e}")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, axes = plt.subplots(2, 1, sharex=True)
    for ax, fn, name in zip(axes, (spectrum_a, spectrum_b), ("S_a", "S_b")):
        for p in (0.0, 1.0):
            ax.plot(offsets, fn(base.replace(p=p), offsets).values, label=f"p = {p:g}")
        ax.set_ylabel(name)
        ax.legend()
    axes[-1].set_xlabel("offset / gamma3")
    fig.savefig("fluorescence_spectra.png", dpi=120)
    print("saved fluorescence_spectra.png")
