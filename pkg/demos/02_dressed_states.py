# %% [markdown]
# Dressed states at two-photon resonance
#
# With Omega1 = Omega2 = Omega and Omega3 = W12 / 2 the four eigenstates of
# the interaction Hamiltonian are known in closed form.  The state |m> has no
# net upper-transition dipole when p = 1, so population piles up in it.

# %%
import numpy as np

from yfluor import dressed_populations, dressed_states, steady_state, transition_rates
from yfluor.dressed import closed_form_eigenvalues
from yfluor.dynamics import params_at
from yfluor.presets import get

# %%
# Numerical eigenvalues against the closed forms
for omega in (0.0, 5.0, 10.0, 20.0):
    states = dressed_states(params_at(get("6").params, "omega12", omega))
    exact = closed_form_eigenvalues(10.0, omega)
    err = max(abs(s.eigenvalue - exact[s.label]) for s in states)
    print(f"Omega = {omega:4g}: " + ", ".join(f"{s.label} {s.eigenvalue:8.4f}" for s in states)
          + f"   (max error {err:.1e})")

# %%
# Steady-state dressed populations with and without interference
for p in (0.0, 1.0):
    params = params_at(get("7a").params.replace(p=p), "omega12", 10.0)
    states = dressed_states(params)
    pops = dressed_populations(steady_state(params), states)
    print(f"p = {p:g}: " + ", ".join(f"rho_{s.label} = {x:.3f}" for s, x in zip(states, pops)))

# %%
# Upper-transition emission rates out of |m>: the p = 1 row vanishes
params = get("5a").params
states = dressed_states(params)
k = [s.label for s in states].index("m")
for p in (0.0, 1.0):
    Ra, _ = transition_rates(states, params.replace(p=p))
    print(f"p = {p:g}: R_a[m] = {np.round(Ra[k], 4) + 0.0}")

# %%
try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    omegas = np.linspace(0, 20, 201)
    fig, ax = plt.subplots()
    for label in ("d", "m", "plus", "minus"):
        ax.plot(omegas, [closed_form_eigenvalues(10.0, o)[label] for o in omegas], label=label)
    ax.set_xlabel("Omega / gamma3")
    ax.set_ylabel("eigenvalue / gamma3")
    ax.legend()
    fig.savefig("dressed_eigenvalues.png", dpi=120)
    print("saved dressed_eigenvalues.png")
