"""Parameter presets for the named figure data sets.

Each preset records the fixed parameters (units of gamma3), the quantity
plotted, its axis range and the values of ``p`` compared.  Ranges not fixed
by the parameter lists are chosen to cover every feature of the curves.
"""
from dataclasses import dataclass

from .params import AtomParams


@dataclass(frozen=True)
class FigurePreset:
    id: str
    kind: str            # "populations", "sym_antisym", "spectrum", "eigenvalues", "dressed_populations"
    params: AtomParams
    axis: str = ""
    start: float = 0.0
    stop: float = 0.0
    p_values: tuple = (0.0, 1.0)
    channel: str = ""
    columns: tuple = ()  # dressed-population labels shown
    rho33_display_factor: float = 1.0  # rho33 divided by this in plot scripts only


def _fig2(g):
    # gamma3 = 1, W12 = 5, Delta_b = 0, Omega1 = Omega2 = Omega3 = 3
    return AtomParams(gamma1=g, gamma2=g, gamma3=1.0, w12=5.0, delta_b=0.0,
                      omega1=3.0, omega2=3.0, omega3=3.0)


def _fig3(g):
    # gamma3 = 1, W12 = 0.2, Delta_b = 0, Omega1 = Omega2 = Omega3 = 10
    return AtomParams(gamma1=g, gamma2=g, gamma3=1.0, w12=0.2, delta_b=0.0,
                      omega1=10.0, omega2=10.0, omega3=10.0)


# gamma3 = 1, W12 = 10, Delta_a = Delta_b = 0, Omega1 = Omega2 = 10, Omega3 = 5, gamma1 = gamma2 = 3
_FIG5 = AtomParams(gamma1=3.0, gamma2=3.0, gamma3=1.0, w12=10.0, omega1=10.0, omega2=10.0,
                   omega3=5.0)

# gamma3 = 1, W12 = 10, Delta_a = Delta_b = 0, Omega3 = 5 (Omega1 = Omega2 = Omega swept)
_FIG6 = AtomParams(gamma3=1.0, w12=10.0, omega3=5.0)

# as above with gamma1 = gamma2 = 3
_FIG7 = AtomParams(gamma1=3.0, gamma2=3.0, gamma3=1.0, w12=10.0, omega3=5.0)

PRESETS = {
    "2a": FigurePreset("2a", "populations", _fig2(0.5), "delta_a", -15.0, 15.0,
                       rho33_display_factor=3.0),
    "2b": FigurePreset("2b", "populations", _fig2(2.0), "delta_a", -15.0, 15.0,
                       rho33_display_factor=6.0),
    "3a": FigurePreset("3a", "populations", _fig3(5.0), "delta_a", -20.0, 20.0,
                       rho33_display_factor=6.0),
    "3b": FigurePreset("3b", "populations", _fig3(1.0), "delta_a", -20.0, 20.0,
                       rho33_display_factor=6.0),
    "4": FigurePreset("4", "sym_antisym", _fig3(5.0).replace(p=1.0), "delta_a", -20.0, 20.0,
                      p_values=(1.0,)),
    "5a": FigurePreset("5a", "spectrum", _FIG5, start=-30.0, stop=30.0, channel="a"),
    "5b": FigurePreset("5b", "spectrum", _FIG5, start=-30.0, stop=30.0, channel="b"),
    "6": FigurePreset("6", "eigenvalues", _FIG6, "omega12", 0.0, 20.0, p_values=(1.0,)),
    "7a": FigurePreset("7a", "dressed_populations", _FIG7, "omega12", 0.0, 20.0,
                       columns=("m", "d")),
    "7b": FigurePreset("7b", "dressed_populations", _FIG7, "omega12", 0.0, 20.0,
                       columns=("plus", "minus")),
}


def get(figure_id):
    key = str(figure_id).lower().strip()
    try:
        return PRESETS[key]
    except KeyError:
        raise KeyError(f"unknown figure {figure_id!r}; choose from {', '.join(PRESETS)}") from None
