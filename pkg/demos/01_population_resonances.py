# %% [markdown]
# Excited-level populations against the upper detuning
#
# The atom has two closely spaced upper levels |1>, |2> that both decay to
# |3>, which decays to the ground level |4>.  When the two upper decays are
# driven by parallel dipoles (p = 1) the resonance in rho11 splits in two.

# %%
import numpy as np

from yfluor import analytic_rho11, steady_state, sweep
from yfluor.peaks import local_maxima
from yfluor.presets import get

grid = np.linspace(-15, 15, 601)

# %%
# Moderate drive, upper decay rate 2 (in units of gamma3)
for p in (0.0, 1.0):
    series = sweep(get("2b").params.replace(p=p), "delta_a", grid)
    rho11 = series.populations[:, 0]
    print(f"p = {p:g}: rho11 maxima at delta_a = {grid[local_maxima(rho11)].round(2)}")

# %%
# Strong drive (Omega = 10): the split peaks move out to +-Omega
wide = np.linspace(-20, 20, 801)
series = sweep(get("3a").params.replace(p=1.0), "delta_a", wide)
print("strong drive, p = 1: maxima at", wide[local_maxima(series.populations[:, 0])].round(2))

# %%
# On resonance the high-intensity closed form gives 1/4 (p = 1) and 1/6 (p = 0)
for p in (1, 0):
    numeric = steady_state(get("3b").params.replace(p=p))[0, 0].real
    print(f"p = {p}: numeric rho11 = {numeric:.4f}, closed form = {analytic_rho11(0.0, 10.0, p):.4f}")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for p in (0.0, 1.0):
        series = sweep(get("2b").params.replace(p=p), "delta_a", grid)
        ax.plot(grid, series.populations[:, 0], label=f"rho11, p = {p:g}")
    ax.set_xlabel("delta_a / gamma3")
    ax.set_ylabel("population")
    ax.legend()
    fig.savefig("population_resonances.png", dpi=120)
    print("saved population_resonances.png")
