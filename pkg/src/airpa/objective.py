"""Reduction of the link SNR to a rational-plus-radical function of the
power-allocation factor beta, and its evaluation.

With M = diag(H_si v) and the quadratic forms

    T  = ||theta~^H M||^2          G2 = ||theta~^H G||^2
    C  = theta~^H G H_si v         W  = h^H v

the SNR equals f(beta) = (u b^2 + 2 e b sqrt(l1 b^2 + l b + f) + d b)/(b b + a)
with the eight scalars

    a  = sI2 P G2 + sI2 sn2        b  = P (sn2 T - sI2 G2)
    d  = P^2 |C|^2 + P sI2 |W|^2   e  = P Re{C conj(W)}
    f  = P sI2                     u  = P^2 (|W|^2 T - |C|^2)
    l  = P^2 T - sI2 P             l1 = -P^2 T

The radicand factors exactly as (1-beta)(f - l1 beta) because l = -(l1+f);
that form is used everywhere since the expanded polynomial cancels
catastrophically at beta -> 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .beamforming import BeamformingDesign, compute_rho
from .channels import ChannelRealization
from .scenario import Scenario

#: iterates near the endpoints are kept inside [GRAD_MARGIN, 1 - GRAD_MARGIN];
#: the radical's derivative diverges at beta = 1 (simple zero of the radicand).
GRAD_MARGIN = 1e-6


class SolverId(str, enum.Enum):
    ES = "ES"
    GA = "GA"
    ESMPI_GA = "ESMPI_GA"
    TTE = "TTE"
    EPA = "EPA"
    FIXED = "FIXED"


@dataclass(frozen=True)
class ObjectiveCoefficients:
    a: float
    b: float
    d: float
    e: float
    f: float
    u: float
    l: float
    l1: float
    # cached quadratic forms and powers (NaN for synthetic coefficient sets)
    norm_tm2: float = math.nan      # ||theta~^H M||^2
    norm_tg2: float = math.nan      # ||theta~^H G||^2
    norm_cascade2: float = math.nan  # ||theta~^H G H_si v||^2
    norm_direct2: float = math.nan  # ||h^H v||^2
    total_power: float = math.nan
    irs_noise_power: float = math.nan
    user_noise_power: float = math.nan

    def scalars(self) -> tuple[float, float, float, float, float, float, float, float]:
        return (self.a, self.b, self.d, self.e, self.f, self.u, self.l, self.l1)


def compute_coefficients(scenario: Scenario, ch: ChannelRealization,
                         design: BeamformingDesign) -> ObjectiveCoefficients:
    Hv = ch.H_si @ design.v
    th2 = np.abs(design.theta_tilde) ** 2
    T = float(np.sum(th2 * np.abs(Hv) ** 2))
    G2 = float(np.sum(th2 * np.abs(ch.g) ** 2))
    C = complex(np.sum(np.conj(design.theta_tilde) * np.conj(ch.g) * Hv))
    W = complex(np.vdot(ch.h, design.v))
    P = scenario.total_power
    sI2 = scenario.irs_noise_power
    sn2 = scenario.user_noise_power
    C2 = abs(C) ** 2
    W2 = abs(W) ** 2
    return ObjectiveCoefficients(
        a=sI2 * P * G2 + sI2 * sn2,
        b=P * (sn2 * T - sI2 * G2),
        d=P * P * C2 + P * sI2 * W2,
        e=P * (C * W.conjugate()).real,
        f=P * sI2,
        u=P * P * (W2 * T - C2),
        l=P * P * T - sI2 * P,
        l1=-P * P * T,
        norm_tm2=T,
        norm_tg2=G2,
        norm_cascade2=C2,
        norm_direct2=W2,
        total_power=P,
        irs_noise_power=sI2,
        user_noise_power=sn2,
    )


def radicand(coeffs: ObjectiveCoefficients, beta):
    """(1-beta)(f - l1 beta), clamped at zero against float negativity."""
    return np.maximum((1.0 - beta) * (coeffs.f - coeffs.l1 * beta), 0.0)


def _check_beta_range(beta):
    if np.any(np.asarray(beta) < 0.0) or np.any(np.asarray(beta) > 1.0):
        raise ValueError("beta must lie in [0, 1]")


def f_rational(coeffs: ObjectiveCoefficients, beta):
    """SNR as the reduced function of beta. Accepts scalars or arrays."""
    _check_beta_range(beta)
    q = np.sqrt(radicand(coeffs, beta))
    num = coeffs.u * beta * beta + 2.0 * coeffs.e * beta * q + coeffs.d * beta
    return num / (coeffs.b * beta + coeffs.a)


def f_gradient(coeffs: ObjectiveCoefficients, beta):
    """Analytic df/dbeta on the safe interval [GRAD_MARGIN, 1-GRAD_MARGIN]."""
    arr = np.asarray(beta)
    if np.any(arr < GRAD_MARGIN) or np.any(arr > 1.0 - GRAD_MARGIN):
        raise ValueError(
            f"beta must lie in [{GRAD_MARGIN}, {1.0 - GRAD_MARGIN}] for the gradient"
        )
    a, b, d, e, _, u, l, l1 = coeffs.scalars()
    q = np.sqrt(radicand(coeffs, beta))
    rp = 2.0 * l1 * beta + l
    g1 = u * b * beta * beta + e * b * beta * beta * rp / q
    g2 = a * d + 2.0 * a * u * beta + 2.0 * a * e * q + e * a * beta * rp / q
    den = b * beta + a
    return (g1 + g2) / (den * den)


def snr_direct(scenario: Scenario, ch: ChannelRealization,
               design: BeamformingDesign, beta) -> float:
    """SNR evaluated along the unreduced signal-model route (the oracle form):
    rho from the IRS power constraint, then the ratio of received signal power
    to amplified-noise-plus-receiver-noise power.
    """
    _check_beta_range(beta)
    Hv = ch.H_si @ design.v
    th2 = np.abs(design.theta_tilde) ** 2
    T = float(np.sum(th2 * np.abs(Hv) ** 2))
    G2 = float(np.sum(th2 * np.abs(ch.g) ** 2))
    C = complex(np.sum(np.conj(design.theta_tilde) * np.conj(ch.g) * Hv))
    W = complex(np.vdot(ch.h, design.v))
    P = scenario.total_power
    rho = compute_rho(P, beta, T, scenario.irs_noise_power)
    num = beta * P * np.abs(rho * C + W) ** 2
    den = scenario.irs_noise_power * rho * rho * G2 + scenario.user_noise_power
    return num / den


_LN2 = math.log(2.0)


def rate(snr):
    """Achievable rate log2(1 + snr) in bits/s/Hz."""
    if isinstance(snr, float):
        if snr < 0.0:
            raise ValueError("snr must be nonnegative")
        return math.log1p(snr) / _LN2
    if np.any(np.asarray(snr) < 0.0):
        raise ValueError("snr must be nonnegative")
    return np.log1p(snr) / _LN2


@dataclass(frozen=True)
class PASolution:
    beta_opt: float
    snr: float
    rate_bits: float
    solver_id: SolverId
    evals: int
    iterations: int

    def __post_init__(self):
        if not 0.0 <= self.beta_opt <= 1.0:
            raise ValueError("beta_opt must lie in [0, 1]")


def make_solution(solver_id: SolverId, beta_opt: float, snr: float,
                  evals: int, iterations: int) -> PASolution:
    snr = float(snr)
    return PASolution(
        beta_opt=float(beta_opt),
        snr=snr,
        rate_bits=math.log1p(snr if snr > 0.0 else 0.0) / _LN2,
        solver_id=solver_id,
        evals=int(evals),
        iterations=int(iterations),
    )
