"""Resonance fluorescence of a driven four-level Y-type atom with decay-induced interference."""
from .errors import (
    DegenerateSpectrum,
    InvalidP,
    InvalidParams,
    InvalidRate,
    NotConverged,
    NotSymmetric,
    SingularLiouvillian,
    SingularMatrix,
    StepTooLarge,
    YFluorError,
)
from .params import AtomParams, pack, unpack, validate
from .liouvillian import LiouvillianSystem, build, derivative
from .dynamics import analytic_rho11, propagate, propagate_to_steady, steady_state, sweep
from .dressed import (
    DressedState,
    dressed_populations,
    dressed_states,
    hamiltonian_matrix,
    sym_antisym,
    transition_rates,
)
from .spectrum import SpectrumSeries, resolvent, spectrum_a, spectrum_b, spectrum_oracle

__version__ = "0.1.0"
