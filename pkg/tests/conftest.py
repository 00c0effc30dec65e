import numpy as np
import pytest

from airpa import (Scenario, compute_coefficients, design_beamforming,
                   generate_channels, trial_seed)


def physical_draws(count, n_elems=16, master=7, scenario=None):
    """Seeded (scenario, channels, design, coeffs) tuples for oracle sweeps."""
    scen = scenario or Scenario(num_irs_elements=n_elems)
    out = []
    for t in range(count):
        ch = generate_channels(scen, trial_seed(master, t))
        design = design_beamforming(ch)
        out.append((scen, ch, design, compute_coefficients(scen, ch, design)))
    return out


@pytest.fixture(scope="session")
def draws16():
    return physical_draws(200, n_elems=16)


@pytest.fixture(scope="session")
def draws64():
    return physical_draws(100, n_elems=64)
