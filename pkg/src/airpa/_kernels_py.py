"""Pure-Python twin of the compiled kernels in _kernels.pyx.

Selected at import time by airpa.kernels when the extension is unavailable
(or when AIRPA_PURE_PYTHON is set). Expressions and evaluation order mirror
the .pyx line for line so both backends agree to the last ulp wherever libm
and CPython round identically.

The eight objective scalars are passed positionally: (a, b, d, e, f, u, l, l1).
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"

_RESIDUAL_RTOL = 1e-8
_IMAG_TOL = 1e-7
_DEGENERATE_RTOL = 1e-12
_ETA_SPLIT_TOL = 1e-10


def f_value(a, b, d, e, f, u, l, l1, beta):
    rad = (1.0 - beta) * (f - l1 * beta)
    if rad < 0.0:
        rad = 0.0
    q = math.sqrt(rad)
    return (u * beta * beta + 2.0 * e * beta * q + d * beta) / (b * beta + a)


def f_grad(a, b, d, e, f, u, l, l1, beta):
    rad = (1.0 - beta) * (f - l1 * beta)
    if rad < 0.0:
        rad = 0.0
    q = math.sqrt(rad)
    rp = 2.0 * l1 * beta + l
    g1 = u * b * beta * beta + e * b * beta * beta * rp / q
    g2 = a * d + 2.0 * a * u * beta + 2.0 * a * e * q + e * a * beta * rp / q
    den = b * beta + a
    return (g1 + g2) / (den * den)


def es_scan(a, b, d, e, f, u, l, l1, grid_points):
    """Best (beta, value) over the uniform grid; ties keep the smaller beta."""
    n = grid_points - 1
    best_j = 0
    best = f_value(a, b, d, e, f, u, l, l1, 0.0)
    for j in range(1, grid_points):
        beta = j / n
        v = f_value(a, b, d, e, f, u, l, l1, beta)
        if v > best:
            best = v
            best_j = j
    return best_j / n, best


def ga_ascend(a, b, d, e, f, u, l, l1, beta_start, step_length, accuracy,
              margin, max_iters):
    """Normalized-step gradient ascent with backtracking.

    Moves are bounded by step_length; a move that fails to increase the
    objective is halved (up to 30 times). Stops on the accuracy rule, on an
    iterate leaving (0, 1), on a fixed point, or at max_iters.
    """
    lo = margin
    hi = 1.0 - margin
    beta = min(max(beta_start, lo), hi)
    fb = f_value(a, b, d, e, f, u, l, l1, beta)
    evals = 1
    iters = 0
    while iters < max_iters:
        iters += 1
        g = f_grad(a, b, d, e, f, u, l, l1, beta)
        evals += 1
        if g == 0.0:
            break
        step = step_length * g / (abs(g) + 1e-30)
        moved = False
        raw = beta
        cand = beta
        fc = fb
        for _ in range(31):
            raw = beta + step
            cand = min(max(raw, lo), hi)
            if cand == beta:
                step *= 0.5
                continue
            fc = f_value(a, b, d, e, f, u, l, l1, cand)
            evals += 1
            if fc > fb:
                moved = True
                break
            step *= 0.5
        if not moved:
            break
        move = abs(cand - beta)
        left_range = raw <= 0.0 or raw >= 1.0
        beta = cand
        fb = fc
        if move <= accuracy or left_range:
            break
    return beta, fb, iters, evals


def esmpi_scan(a, b, d, e, f, u, l, l1, num_inits, step_length, accuracy,
               margin, max_iters):
    """Multi-start ascent; argmax over clamped finals plus the endpoints."""
    best_beta = 0.0
    best_f = f_value(a, b, d, e, f, u, l, l1, 0.0)
    f1 = f_value(a, b, d, e, f, u, l, l1, 1.0)
    evals = 2
    iters = 0
    if f1 > best_f:
        best_beta, best_f = 1.0, f1
    lo = margin
    hi = 1.0 - margin
    for k in range(num_inits):
        if num_inits == 1:
            start = 0.5
        else:
            start = lo + k * (hi - lo) / (num_inits - 1)
        bk, fk, it, ev = ga_ascend(a, b, d, e, f, u, l, l1, start,
                                   step_length, accuracy, margin, max_iters)
        iters += it
        evals += ev
        if fk > best_f or (fk == best_f and bk < best_beta):
            best_beta, best_f = bk, fk
    return best_beta, best_f, iters, evals


# -- closed-form path ---------------------------------------------------------

def _cbrt(x):
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _poly_eval(coeffs, deg, r):
    p = coeffs[0]
    for i in range(1, deg + 1):
        p = p * r + coeffs[i]
    return p


def _poly_polish(coeffs, deg, r):
    for _ in range(3):
        p = coeffs[0]
        dp = 0.0
        for i in range(1, deg + 1):
            dp = dp * r + p
            p = p * r + coeffs[i]
        if p == 0.0 or dp == 0.0:
            break
        rn = r - p / dp
        if not math.isfinite(rn):
            break
        if abs(_poly_eval(coeffs, deg, rn)) >= abs(p):
            break
        r = rn
    return r


def _cubic_real_roots(b, c, d):
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * (b * b * b) / 27.0 - b * c / 3.0 + d
    ts = []
    if p == 0.0 and q == 0.0:
        ts.append(0.0)
    else:
        disc = -4.0 * (p * p * p) - 27.0 * q * q
        disc_scale = max(abs(4.0 * (p * p * p)), 27.0 * q * q)
        if abs(disc) <= 1e-12 * disc_scale and p != 0.0:
            ts.append(3.0 * q / p)
            ts.append(-3.0 * q / (2.0 * p))
        elif disc > 0.0:
            m = 2.0 * math.sqrt(-p / 3.0)
            arg = 3.0 * q / (p * m)
            arg = min(1.0, max(-1.0, arg))
            theta = math.acos(arg) / 3.0
            for k in range(3):
                ts.append(m * math.cos(theta - 2.0 * math.pi * k / 3.0))
        else:
            s = math.sqrt(max(q * q / 4.0 + (p * p * p) / 27.0, 0.0))
            ts.append(_cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s))
    return [t - shift for t in ts]


def _quadratic_real_roots(b, c):
    disc = b * b - 4.0 * c
    if disc < 0.0:
        return []
    s = math.sqrt(disc)
    qf = -(b + math.copysign(s, b)) / 2.0
    if qf == 0.0:
        return [0.0]
    r1, r2 = qf, c / qf
    return [r1] if r1 == r2 else [r1, r2]


def quartic_real_roots(K1, K2, K3, K4, K5):
    """Real roots of K1 x^4 + ... + K5 with degenerate-degree peeling.

    Returns (roots, ok); ok is False when a polished root fails the scaled
    residual bound and the caller should use the robust fallback path.
    """
    ks = [K1, K2, K3, K4, K5]
    while len(ks) > 1:
        rest = max(abs(k) for k in ks[1:])
        if abs(ks[0]) <= _DEGENERATE_RTOL * rest:
            ks = ks[1:]
        else:
            break
    if len(ks) == 1:
        return [], True
    lead = ks[0]
    poly = [k / lead for k in ks]
    deg = len(poly) - 1
    if deg == 1:
        cands = [-poly[1]]
    elif deg == 2:
        cands = _quadratic_real_roots(poly[1], poly[2])
    elif deg == 3:
        cands = _cubic_real_roots(poly[1], poly[2], poly[3])
    else:
        cands = _ferrari(poly[1], poly[2], poly[3], poly[4])
    scale = 1.0
    for i in range(1, deg + 1):
        if abs(poly[i]) > scale:
            scale = abs(poly[i])
    roots = []
    for r in cands:
        if not math.isfinite(r):
            return [], False
        r = _poly_polish(poly, deg, r)
        dup = False
        for prev in roots:
            if abs(r - prev) <= 1e-7 * (1.0 + abs(r)):
                dup = True
                break
        if dup:
            continue
        rm = 1.0
        for _ in range(deg):
            rm *= abs(r)
        if abs(_poly_eval(poly, deg, r)) > _RESIDUAL_RTOL * (1.0 + rm) * scale:
            return [], False
        roots.append(r)
    roots.sort()
    return roots, True


def _ferrari(A, B, C, D):
    res = _cubic_real_roots(-B, A * C - 4.0 * D, -(A * A * D - 4.0 * B * D + C * C))
    gamma = res[0]
    best = A * A / 4.0 - B + gamma
    for y in res[1:]:
        v = A * A / 4.0 - B + y
        if v > best:
            best = v
            gamma = y
    eta2 = A * A / 4.0 - B + gamma
    eta_split = math.sqrt(eta2) if eta2 > 0.0 else 0.0
    cands = []
    if eta_split < _ETA_SPLIT_TOL * (1.0 + abs(A)):
        p = B - 3.0 * A * A / 8.0
        r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * (A * A * A * A) / 256.0
        for z in _quadratic_real_roots(p, r):
            if z < 0.0:
                continue
            t = math.sqrt(z)
            cands.append(t - A / 4.0)
            cands.append(-t - A / 4.0)
        return cands
    s = (4.0 * A * B - 8.0 * C - A * A * A) / (4.0 * eta_split)
    base = 3.0 * A * A / 4.0 - eta2 - 2.0 * B
    for sign_eta in (1.0, -1.0):
        mu2 = base + sign_eta * s
        center = -A / 4.0 + sign_eta * eta_split / 2.0
        if mu2 >= 0.0:
            half = math.sqrt(mu2) / 2.0
            cands.append(center + half)
            cands.append(center - half)
        else:
            imag = math.sqrt(-mu2) / 2.0
            if imag <= _IMAG_TOL * (1.0 + abs(center)):
                cands.append(center)
    return cands


def tte_solve(a, b, d, e, f, u, l, l1, beta0):
    """Closed-form solve: Taylor surrogate, quartic roots, argmax of the
    original objective over the clamped roots plus the endpoints.

    Returns (beta_opt, f_opt, evals, ok); ok False means the quartic path
    needs the robust Python fallback.
    """
    r = l1 * beta0 * beta0 + l * beta0 + f
    if not r > 0.0:
        return 0.0, 0.0, 0, False
    rp = 2.0 * l1 * beta0 + l
    q0 = math.sqrt(r)
    q1 = rp / (2.0 * q0)
    q2 = l1 / q0 - rp * rp / (4.0 * r * q0)
    q3 = -3.0 * l1 * rp / (2.0 * r * q0) + 3.0 * (rp * rp * rp) / (8.0 * r * r * q0)
    k1 = e * q3 / 3.0
    k2 = e * q2 - e * beta0 * q3
    k3 = u + 2.0 * e * q1 - 2.0 * e * beta0 * q2 + e * (beta0 * beta0) * q3
    k4 = (d + 2.0 * e * q0 - 2.0 * e * beta0 * q1
          + e * (beta0 * beta0) * q2 - e * (beta0 * beta0 * beta0) * q3 / 3.0)
    roots, ok = quartic_real_roots(
        3.0 * b * k1,
        2.0 * b * k2 + 4.0 * a * k1,
        b * k3 + 3.0 * a * k2,
        2.0 * a * k3,
        a * k4,
    )
    if not ok:
        return 0.0, 0.0, 0, False
    cands = [0.0, 1.0]
    for root in roots:
        c = min(max(root, 0.0), 1.0)
        dup = False
        for prev in cands:
            if abs(c - prev) <= 1e-12:
                dup = True
                break
        if not dup:
            cands.append(c)
    best_beta = cands[0]
    best_f = f_value(a, b, d, e, f, u, l, l1, cands[0])
    evals = 1
    for c in cands[1:]:
        v = f_value(a, b, d, e, f, u, l, l1, c)
        evals += 1
        if v > best_f or (v == best_f and c < best_beta):
            best_beta, best_f = c, v
    return best_beta, best_f, evals, True
