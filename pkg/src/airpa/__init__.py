"""Optimal transmit-power split between a base station and an active IRS."""

__version__ = "0.1.0"

from .scenario import ConfigError, Scenario, distance, load_scenario, pathloss_gain
from .channels import ChannelRealization, generate_channels, splitmix64, trial_seed
from .beamforming import BeamformingDesign, compute_rho, design_beamforming
from .objective import (GRAD_MARGIN, ObjectiveCoefficients, PASolution, SolverId,
                        compute_coefficients, f_gradient, f_rational, rate,
                        snr_direct)
from .polyroots import QuarticCoefficients, RootSet, solve_cubic, solve_quartic
from .taylor import TaylorExpansion, derivative_numerator, expand_q, surrogate_coeffs
from .solvers import (GAConfig, ga_from_point, solve, solve_epa, solve_es,
                      solve_esmpi_ga, solve_fixed, solve_ga, solve_tte)

__all__ = [
    "__version__",
    "ConfigError", "Scenario", "distance", "load_scenario", "pathloss_gain",
    "ChannelRealization", "generate_channels", "splitmix64", "trial_seed",
    "BeamformingDesign", "compute_rho", "design_beamforming",
    "GRAD_MARGIN", "ObjectiveCoefficients", "PASolution", "SolverId",
    "compute_coefficients", "f_gradient", "f_rational", "rate", "snr_direct",
    "QuarticCoefficients", "RootSet", "solve_cubic", "solve_quartic",
    "TaylorExpansion", "derivative_numerator", "expand_q", "surrogate_coeffs",
    "GAConfig", "ga_from_point", "solve", "solve_epa", "solve_es",
    "solve_esmpi_ga", "solve_fixed", "solve_ga", "solve_tte",
]
