"""Fixed transmit/reflect designs assumed given by the power-allocation stage.

The transmit vector is maximum-ratio transmission on the direct link,
v = h/||h||. The IRS direction uses uniform element magnitudes 1/sqrt(N)
with per-element phases chosen so every cascaded term conj(theta_n) *
conj(g_n) * [H_si v]_n carries the phase of h^H v; the cascaded and direct
paths then add coherently and the cross coefficient e is real-nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChannelRealization


class DegenerateChannelError(ValueError):
    """Direct channel is identically zero; MRT is undefined."""


@dataclass(frozen=True)
class BeamformingDesign:
    v: np.ndarray            # (M,) unit norm
    theta_tilde: np.ndarray  # (N,) unit norm

    def __post_init__(self):
        if abs(np.linalg.norm(self.v) - 1.0) > 1e-12:
            raise ValueError("v must have unit Euclidean norm")
        if abs(np.linalg.norm(self.theta_tilde) - 1.0) > 1e-12:
            raise ValueError("theta_tilde must have unit Euclidean norm")
        self.v.setflags(write=False)
        self.theta_tilde.setflags(write=False)


def design_beamforming(ch: ChannelRealization) -> BeamformingDesign:
    """MRT on the direct link plus phase-aligned uniform IRS direction."""
    h_norm = np.linalg.norm(ch.h)
    if h_norm == 0.0:
        raise DegenerateChannelError("||h|| = 0")
    v = ch.h / h_norm
    phi_h = np.angle(np.vdot(ch.h, v))        # arg(h^H v)
    cascade = np.conj(ch.g) * (ch.H_si @ v)   # c_n = g_n^* [H_si v]_n
    N = ch.g.shape[0]
    theta = np.exp(1j * (np.angle(cascade) - phi_h)) / np.sqrt(N)
    return BeamformingDesign(v=v, theta_tilde=theta)


def compute_rho(total_power: float, beta: float, cascade_gain: float,
                irs_noise_power: float) -> float:
    """Amplification magnitude rho that spends the IRS share (1-beta)P.

    cascade_gain is ||theta~^H diag(H_si v)||^2. The denominator is bounded
    below by the IRS noise power, so rho is finite for all beta in [0, 1]
    and strictly decreasing in beta.
    """
    b = np.asarray(beta)
    if np.any(b < 0.0) or np.any(b > 1.0):
        raise ValueError("beta must lie in [0, 1]")
    return np.sqrt(
        (1.0 - beta) * total_power
        / (beta * total_power * cascade_gain + irs_noise_power)
    )
