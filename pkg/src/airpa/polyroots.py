"""Closed-form real-root extraction for the monic quartics arising from the
surrogate objective's derivative numerator.

The production path is Ferrari's factorization through a resolvent cubic,
with a biquadratic branch where the factorization degenerates and a
companion-matrix eigenvalue fallback whenever a residual check fails, so the
reported roots always satisfy the scaled residual bound regardless of branch
conditioning. Degenerate leading coefficients delegate to lower degrees.

naming: the Ferrari split intermediate (the textbook eta) is called eta_split
here; it is unrelated to the gradient-ascent stopping accuracy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

RESIDUAL_RTOL = 1e-8         # |p(r)| <= RESIDUAL_RTOL * (1 + |r|^4) * coeff scale
IMAG_TOL = 1e-7              # relative imaginary part below which a root is real
DEGENERATE_RTOL = 1e-12      # leading coefficient negligible vs the others
ETA_SPLIT_TOL = 1e-10        # |eta_split| below this switches to the biquadratic branch


@dataclass(frozen=True)
class QuarticCoefficients:
    """K1 x^4 + K2 x^3 + K3 x^2 + K4 x + K5, with the monic A..D views."""
    K1: float
    K2: float
    K3: float
    K4: float
    K5: float

    @classmethod
    def monic(cls, A: float, B: float, C: float, D: float) -> "QuarticCoefficients":
        return cls(1.0, A, B, C, D)

    @property
    def A(self) -> float:
        return self.K2 / self.K1

    @property
    def B(self) -> float:
        return self.K3 / self.K1

    @property
    def C(self) -> float:
        return self.K4 / self.K1

    @property
    def D(self) -> float:
        return self.K5 / self.K1


@dataclass(frozen=True)
class RootSet:
    real_roots: list[float] = field(default_factory=list)   # ascending
    residuals: list[float] = field(default_factory=list)    # |p(root)|, same order


def _cbrt(x: float) -> float:
    # sign-symmetric real cube root; never the principal complex branch
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _polish(coeffs: list[float], r: float, steps: int = 3) -> float:
    """A few safeguarded Newton steps on the monic polynomial given by coeffs."""
    n = len(coeffs) - 1
    for _ in range(steps):
        p = coeffs[0]
        dp = 0.0
        for c in coeffs[1:]:
            dp = dp * r + p
            p = p * r + c
        if p == 0.0 or dp == 0.0:
            break
        r_new = r - p / dp
        if not math.isfinite(r_new):
            break
        p_new = coeffs[0]
        for c in coeffs[1:]:
            p_new = p_new * r_new + c
        if abs(p_new) >= abs(p):
            break
        r = r_new
    return r


def _eval(coeffs: list[float], r: float) -> float:
    p = coeffs[0]
    for c in coeffs[1:]:
        p = p * r + c
    return p


def _dedup_sorted(roots: list[float], poly: list[float]) -> tuple[list[float], list[float]]:
    roots = sorted(roots)
    out: list[float] = []
    res: list[float] = []
    for r in roots:
        pr = abs(_eval(poly, r))
        if out and abs(r - out[-1]) <= 1e-7 * (1.0 + abs(r)):
            if pr < res[-1]:          # keep the better representative
                out[-1], res[-1] = r, pr
            continue
        out.append(r)
        res.append(pr)
    return out, res


def solve_cubic(b: float, c: float, d: float) -> list[float]:
    """All real roots of the monic cubic x^3 + b x^2 + c x + d, ascending."""
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b ** 3 / 27.0 - b * c / 3.0 + d
    if p == 0.0 and q == 0.0:
        ts = [0.0]
    else:
        disc = -4.0 * p ** 3 - 27.0 * q * q
        disc_scale = max(abs(4.0 * p ** 3), 27.0 * q * q)
        if abs(disc) <= 1e-12 * disc_scale and p != 0.0:
            # simple-plus-double boundary (exact zero never survives rounding)
            ts = [3.0 * q / p, -3.0 * q / (2.0 * p)]
        elif disc > 0.0:
            # three distinct real roots: trigonometric form (p < 0 here)
            m = 2.0 * math.sqrt(-p / 3.0)
            arg = 3.0 * q / (p * m)
            arg = min(1.0, max(-1.0, arg))
            theta = math.acos(arg) / 3.0
            ts = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        else:
            # one real root: Cardano
            s = math.sqrt(max(q * q / 4.0 + p ** 3 / 27.0, 0.0))
            ts = [_cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s)]
    poly = [1.0, b, c, d]
    roots = [_polish(poly, t - shift) for t in ts]
    out, _ = _dedup_sorted(roots, poly)
    return out


def _solve_quadratic(b: float, c: float) -> list[float]:
    """Real roots of x^2 + b x + c via the cancellation-safe formula."""
    disc = b * b - 4.0 * c
    if disc < 0.0:
        return []
    s = math.sqrt(disc)
    qf = -(b + math.copysign(s, b)) / 2.0
    if qf == 0.0:
        return [0.0]
    roots = sorted({qf, c / qf})
    return roots


def _ferrari_candidates(A: float, B: float, C: float, D: float) -> list[float]:
    """Real-root candidates of the monic quartic from Ferrari's split."""
    # resolvent cubic y^3 - B y^2 + (AC - 4D) y - (A^2 D - 4BD + C^2) = 0
    resolvent = solve_cubic(-B, A * C - 4.0 * D, -(A * A * D - 4.0 * B * D + C * C))
    gamma = max(resolvent, key=lambda y: A * A / 4.0 - B + y)
    eta2 = A * A / 4.0 - B + gamma
    eta_split = math.sqrt(eta2) if eta2 > 0.0 else 0.0
    cands: list[float] = []
    if eta_split < ETA_SPLIT_TOL * (1.0 + abs(A)):
        # Ferrari's split degenerates: the depressed quartic has (numerically)
        # no odd term, so solve it as a quadratic in t^2
        p = B - 3.0 * A * A / 8.0
        r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * A ** 4 / 256.0
        for z in _solve_quadratic(p, r):
            if z < 0.0:
                continue
            t = math.sqrt(z)
            cands.extend([t - A / 4.0, -t - A / 4.0])
        return cands
    s = (4.0 * A * B - 8.0 * C - A ** 3) / (4.0 * eta_split)
    base = 3.0 * A * A / 4.0 - eta2 - 2.0 * B
    for sign_eta, mu2 in ((1.0, base + s), (-1.0, base - s)):
        center = -A / 4.0 + sign_eta * eta_split / 2.0
        if mu2 >= 0.0:
            half = math.sqrt(mu2) / 2.0
            cands.extend([center + half, center - half])
        else:
            # complex pair; keep only if the imaginary part is negligible
            imag = math.sqrt(-mu2) / 2.0
            if imag <= IMAG_TOL * (1.0 + abs(center)):
                cands.append(center)
    return cands


def _companion_real_roots(poly: list[float]) -> list[float]:
    roots = np.roots(poly)
    out = []
    for z in roots:
        if abs(z.imag) <= IMAG_TOL * (1.0 + abs(z)):
            out.append(float(z.real))
    return out


def _finish(poly: list[float], cands: list[float]) -> RootSet:
    """Polish, dedup, residual-check; fall back to companion eigenvalues."""
    scale = max(1.0, *(abs(c) for c in poly[1:])) if len(poly) > 1 else 1.0
    deg = len(poly) - 1

    def ok(root: float, resid: float) -> bool:
        return resid <= RESIDUAL_RTOL * (1.0 + abs(root) ** deg) * scale

    polished = [_polish(poly, r) for r in cands if math.isfinite(r)]
    roots, residuals = _dedup_sorted(polished, poly)
    if roots and all(ok(r, s) for r, s in zip(roots, residuals)):
        return RootSet(real_roots=roots, residuals=residuals)
    # branch conditioning failed somewhere: recompute everything robustly
    polished = [_polish(poly, r) for r in _companion_real_roots(poly)]
    roots, residuals = _dedup_sorted(polished, poly)
    keep = [(r, s) for r, s in zip(roots, residuals) if ok(r, s)]
    return RootSet(real_roots=[r for r, _ in keep], residuals=[s for _, s in keep])


def solve_quartic(q: QuarticCoefficients) -> RootSet:
    """All real roots of the (possibly degenerate) quartic K1 x^4 + ... + K5."""
    ks = [q.K1, q.K2, q.K3, q.K4, q.K5]
    if not all(math.isfinite(k) for k in ks):
        raise ValueError("quartic coefficients must be finite")
    # peel degenerate leading coefficients down to the effective degree
    while len(ks) > 1 and abs(ks[0]) <= DEGENERATE_RTOL * max(abs(k) for k in ks[1:]):
        ks = ks[1:]
    if len(ks) == 1:
        return RootSet()          # constant: no isolated roots to report
    lead = ks[0]
    poly = [k / lead for k in ks]
    deg = len(poly) - 1
    if deg == 1:
        return _finish(poly, [-poly[1]])
    if deg == 2:
        return _finish(poly, _solve_quadratic(poly[1], poly[2]))
    if deg == 3:
        return _finish(poly, solve_cubic(poly[1], poly[2], poly[3]))
    return _finish(poly, _ferrari_candidates(poly[1], poly[2], poly[3], poly[4]))
