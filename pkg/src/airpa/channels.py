"""Seeded Rayleigh channel realizations with distance-dependent path loss.

Every channel entry is an independent circularly-symmetric complex Gaussian
whose variance equals the link's path-loss gain. Generation is a pure
function of (scenario, seed): a fixed draw order (H_si, then g, then h; real
parts before imaginary parts) makes realizations bit-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scenario import Scenario

_MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    """One step of the SplitMix64 mixer (the declared 64-bit mixing function)."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def trial_seed(master_seed: int, trial_index: int) -> int:
    """Per-trial seed, independent of execution order across workers."""
    return splitmix64((splitmix64(master_seed & _MASK64) + trial_index) & _MASK64)


@dataclass(frozen=True)
class ChannelRealization:
    H_si: np.ndarray   # (N, M) BS -> IRS
    g: np.ndarray      # (N,)   IRS -> user (the model's g^H is its conjugate)
    h: np.ndarray      # (M,)   BS -> user
    seed_used: int

    def __post_init__(self):
        N, M = self.H_si.shape
        if self.g.shape != (N,) or self.h.shape != (M,):
            raise ValueError("channel dimensions are inconsistent")
        for arr in (self.H_si, self.g, self.h):
            if not np.all(np.isfinite(arr.view(np.float64))):
                raise ValueError("channel entries must be finite")
            arr.setflags(write=False)


def _draw(rng: np.random.Generator, shape, gain: float) -> np.ndarray:
    scale = np.sqrt(gain / 2.0)
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return scale * (re + 1j * im)


def generate_channels(scenario: Scenario, seed: int) -> ChannelRealization:
    """Draw one realization of (H_si, g, h) for the scenario, reproducibly."""
    seed = seed & _MASK64
    rng = np.random.default_rng(seed)
    N, M = scenario.num_irs_elements, scenario.num_bs_antennas
    H_si = _draw(rng, (N, M), scenario.gain_bs_irs())
    g = _draw(rng, (N,), scenario.gain_irs_user())
    h = _draw(rng, (M,), scenario.gain_bs_user())
    return ChannelRealization(H_si=H_si, g=g, h=h, seed_used=seed)
