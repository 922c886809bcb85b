import numpy as np
import pytest

from yfluor import AtomParams
from yfluor import presets


def fig_params(figure_id, **changes):
    return presets.get(figure_id).params.replace(**changes)


def random_params(rng, w12_min=0.1):
    """A random valid parameter draw with non-degenerate excited levels."""
    return AtomParams(
        gamma1=rng.uniform(0.1, 3.0),
        gamma2=rng.uniform(0.1, 3.0),
        gamma3=rng.uniform(0.5, 2.0),
        w12=rng.uniform(w12_min, 10.0),
        delta_a=rng.uniform(-10.0, 10.0),
        delta_b=rng.uniform(-5.0, 5.0),
        omega1=rng.uniform(0.0, 10.0),
        omega2=rng.uniform(0.0, 10.0),
        omega3=rng.uniform(0.5, 10.0),
        p=rng.uniform(-1.0, 1.0),
    )


def random_density(rng, n=4):
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = A @ A.conj().T
    return rho / np.trace(rho).real


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    """Print the acceptance verdicts collected by test_acceptance.py."""
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "VERDICTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
