# %% [markdown]
# Degenerate upper levels with parallel dipoles
#
# With W12 = 0, p = 1 and equal upper decay rates the antisymmetric
# combination |a> = (|1> - |2>)/sqrt(2) neither decays nor couples to the
# drive when Omega1 = Omega2.  The Liouvillian is then singular and the long
# time state depends on where the atom started.

# %%
import numpy as np

from yfluor import AtomParams, SingularLiouvillian, propagate_to_steady, steady_state
from yfluor.params import projector

params = AtomParams(gamma1=1.0, gamma2=1.0, w12=0.0, omega1=3.0, omega2=3.0, omega3=3.0, p=1.0)

# %%
try:
    steady_state(params)
except SingularLiouvillian as exc:
    print("steady_state:", exc)

# %%
antisym = projector(np.array([1.0, -1.0, 0.0, 0.0]) / np.sqrt(2.0))
for name, rho0 in (("ground |4>", projector(4)), ("antisymmetric |a>", antisym)):
    rho, t = propagate_to_steady(params, rho0)
    print(f"from {name:18s}: populations {np.real(np.diag(rho)).round(4)} (settled by t = {t:g})")

# %%
# A small splitting W12 restores a unique steady state
rho = steady_state(params.replace(w12=0.5))
print("W12 = 0.5:", np.real(np.diag(rho)).round(4))
