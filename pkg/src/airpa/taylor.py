"""Cubic Taylor surrogate of the radical q(beta) and the quartic derivative
numerator it induces on the objective.

Replacing q(beta) = sqrt(l1 b^2 + l b + f) by its third-order expansion at
beta0 turns the objective's numerator into the polynomial
k1 b^4 + k2 b^3 + k3 b^2 + k4 b, whose stationarity condition is the quartic
K1 b^4 + ... + K5 = 0 solved in closed form by polyroots.

The k coefficients below are re-derived by expanding
u b^2 + 2 e b qhat(b) + d b in powers of b; they are pinned by a pointwise
identity test against that expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .objective import ObjectiveCoefficients
from .polyroots import QuarticCoefficients


@dataclass(frozen=True)
class TaylorExpansion:
    beta0: float
    q0: float
    q1: float
    q2: float
    q3: float
    k1: float
    k2: float
    k3: float
    k4: float


def _q_derivatives(coeffs: ObjectiveCoefficients, beta0: float):
    l1, l, f = coeffs.l1, coeffs.l, coeffs.f
    # literal polynomial radicand: beta0 is interior, so no cancellation risk,
    # and the expansion stays meaningful for arbitrary quadratics under the root
    r = l1 * beta0 * beta0 + l * beta0 + f
    if not r > 0.0:
        raise ValueError(f"radicand must be positive at beta0={beta0}")
    rp = 2.0 * l1 * beta0 + l
    q0 = np.sqrt(r)
    q1 = rp / (2.0 * q0)
    q2 = l1 / q0 - rp * rp / (4.0 * r * q0)
    q3 = -3.0 * l1 * rp / (2.0 * r * q0) + 3.0 * rp ** 3 / (8.0 * r * r * q0)
    return float(q0), float(q1), float(q2), float(q3)


def _k_from_q(coeffs: ObjectiveCoefficients, beta0: float,
              q0: float, q1: float, q2: float, q3: float):
    e, u, d = coeffs.e, coeffs.u, coeffs.d
    k1 = e * q3 / 3.0
    k2 = e * q2 - e * beta0 * q3
    k3 = u + 2.0 * e * q1 - 2.0 * e * beta0 * q2 + e * beta0 ** 2 * q3
    k4 = (d + 2.0 * e * q0 - 2.0 * e * beta0 * q1
          + e * beta0 ** 2 * q2 - e * beta0 ** 3 * q3 / 3.0)
    return k1, k2, k3, k4


def expand_q(coeffs: ObjectiveCoefficients, beta0: float = 0.5,
             order: int = 3) -> TaylorExpansion:
    """Taylor data of q at beta0, truncated to the given order (1..3).

    Truncation zeroes the higher q derivatives, so the same k machinery
    yields the lower-order surrogates (order=1 is the linear surrogate used
    for comparison curves).
    """
    if order not in (1, 2, 3):
        raise ValueError("order must be 1, 2 or 3")
    q0, q1, q2, q3 = _q_derivatives(coeffs, beta0)
    if order < 3:
        q3 = 0.0
    if order < 2:
        q2 = 0.0
    k1, k2, k3, k4 = _k_from_q(coeffs, beta0, q0, q1, q2, q3)
    return TaylorExpansion(beta0=beta0, q0=q0, q1=q1, q2=q2, q3=q3,
                           k1=k1, k2=k2, k3=k3, k4=k4)


def surrogate_coeffs(te: TaylorExpansion, coeffs: ObjectiveCoefficients):
    """The numerator polynomial coefficients (k1, k2, k3, k4) for te's q data."""
    return _k_from_q(coeffs, te.beta0, te.q0, te.q1, te.q2, te.q3)


def qhat(te: TaylorExpansion, beta):
    """The truncated Taylor polynomial of q evaluated at beta."""
    x = np.asarray(beta) - te.beta0
    return te.q0 + te.q1 * x + te.q2 * x * x / 2.0 + te.q3 * x ** 3 / 6.0


def surrogate_value(te: TaylorExpansion, coeffs: ObjectiveCoefficients, beta):
    """The surrogate objective (k-polynomial over the shared denominator)."""
    b = np.asarray(beta)
    num = ((te.k1 * b + te.k2) * b + te.k3) * b * b + te.k4 * b
    return num / (coeffs.b * b + coeffs.a)


def derivative_numerator(te: TaylorExpansion,
                         coeffs: ObjectiveCoefficients) -> QuarticCoefficients:
    """Quartic numerator of the surrogate's derivative: d/db [N/(b*beta+a)]
    has numerator N'(beta)(b*beta+a) - N(beta)*b, expanded below."""
    a, b = coeffs.a, coeffs.b
    k1, k2, k3, k4 = te.k1, te.k2, te.k3, te.k4
    return QuarticCoefficients(
        K1=3.0 * b * k1,
        K2=2.0 * b * k2 + 4.0 * a * k1,
        K3=b * k3 + 3.0 * a * k2,
        K4=2.0 * a * k3,
        K5=a * k4,
    )
