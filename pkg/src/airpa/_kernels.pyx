# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: objective/gradient evaluation, the grid scan, the
multi-start gradient ascent, and the closed-form solve.

This module mirrors _kernels_py.py line for line; keep the two in sync.
The eight objective scalars are passed positionally: (a, b, d, e, f, u, l, l1).
"""

from libc.math cimport M_PI, acos, cbrt, cos, fabs, isfinite, sqrt

BACKEND_NAME = "cython"

cdef double _RESIDUAL_RTOL = 1e-8
cdef double _IMAG_TOL = 1e-7
cdef double _DEGENERATE_RTOL = 1e-12
cdef double _ETA_SPLIT_TOL = 1e-10


cdef inline double _clamp(double x, double lo, double hi) nogil:
    if x < lo:
        return lo
    if x > hi:
        return hi
    return x


cdef inline double _f_value(double a, double b, double d, double e, double f,
                            double u, double l, double l1, double beta) nogil:
    cdef double rad = (1.0 - beta) * (f - l1 * beta)
    cdef double q
    if rad < 0.0:
        rad = 0.0
    q = sqrt(rad)
    return (u * beta * beta + 2.0 * e * beta * q + d * beta) / (b * beta + a)


cdef inline double _f_grad(double a, double b, double d, double e, double f,
                           double u, double l, double l1, double beta) nogil:
    cdef double rad = (1.0 - beta) * (f - l1 * beta)
    cdef double q, rp, g1, g2, den
    if rad < 0.0:
        rad = 0.0
    q = sqrt(rad)
    rp = 2.0 * l1 * beta + l
    g1 = u * b * beta * beta + e * b * beta * beta * rp / q
    g2 = a * d + 2.0 * a * u * beta + 2.0 * a * e * q + e * a * beta * rp / q
    den = b * beta + a
    return (g1 + g2) / (den * den)


def f_value(double a, double b, double d, double e, double f,
            double u, double l, double l1, double beta):
    return _f_value(a, b, d, e, f, u, l, l1, beta)


def f_grad(double a, double b, double d, double e, double f,
           double u, double l, double l1, double beta):
    return _f_grad(a, b, d, e, f, u, l, l1, beta)


def es_scan(double a, double b, double d, double e, double f,
            double u, double l, double l1, int grid_points):
    """Best (beta, value) over the uniform grid; ties keep the smaller beta."""
    cdef int n = grid_points - 1
    cdef int best_j = 0
    cdef int j
    cdef double best, beta, v
    with nogil:
        best = _f_value(a, b, d, e, f, u, l, l1, 0.0)
        for j in range(1, grid_points):
            beta = (<double> j) / n
            v = _f_value(a, b, d, e, f, u, l, l1, beta)
            if v > best:
                best = v
                best_j = j
    return (<double> best_j) / n, best


cdef int _ga_ascend(double a, double b, double d, double e, double f,
                    double u, double l, double l1,
                    double beta_start, double step_length, double accuracy,
                    double margin, long max_iters,
                    double *out_beta, double *out_f,
                    long *out_iters, long *out_evals) nogil:
    cdef double lo = margin
    cdef double hi = 1.0 - margin
    cdef double beta = _clamp(beta_start, lo, hi)
    cdef double fb = _f_value(a, b, d, e, f, u, l, l1, beta)
    cdef long evals = 1
    cdef long iters = 0
    cdef double g, step, raw, cand, fc, move
    cdef bint moved, left_range
    cdef int h
    while iters < max_iters:
        iters += 1
        g = _f_grad(a, b, d, e, f, u, l, l1, beta)
        evals += 1
        if g == 0.0:
            break
        step = step_length * g / (fabs(g) + 1e-30)
        moved = False
        raw = beta
        cand = beta
        fc = fb
        for h in range(31):
            raw = beta + step
            cand = _clamp(raw, lo, hi)
            if cand == beta:
                step *= 0.5
                continue
            fc = _f_value(a, b, d, e, f, u, l, l1, cand)
            evals += 1
            if fc > fb:
                moved = True
                break
            step *= 0.5
        if not moved:
            break
        move = fabs(cand - beta)
        left_range = raw <= 0.0 or raw >= 1.0
        beta = cand
        fb = fc
        if move <= accuracy or left_range:
            break
    out_beta[0] = beta
    out_f[0] = fb
    out_iters[0] = iters
    out_evals[0] = evals
    return 0


def ga_ascend(double a, double b, double d, double e, double f,
              double u, double l, double l1,
              double beta_start, double step_length, double accuracy,
              double margin, long max_iters):
    cdef double beta, fb
    cdef long iters, evals
    _ga_ascend(a, b, d, e, f, u, l, l1, beta_start, step_length, accuracy,
               margin, max_iters, &beta, &fb, &iters, &evals)
    return beta, fb, iters, evals


def esmpi_scan(double a, double b, double d, double e, double f,
               double u, double l, double l1,
               int num_inits, double step_length, double accuracy,
               double margin, long max_iters):
    """Multi-start ascent; argmax over clamped finals plus the endpoints."""
    cdef double best_beta = 0.0
    cdef double best_f, f1, lo, hi, start, bk, fk
    cdef long iters = 0, evals = 2, it = 0, ev = 0
    cdef int k
    with nogil:
        best_f = _f_value(a, b, d, e, f, u, l, l1, 0.0)
        f1 = _f_value(a, b, d, e, f, u, l, l1, 1.0)
        if f1 > best_f:
            best_beta = 1.0
            best_f = f1
        lo = margin
        hi = 1.0 - margin
        for k in range(num_inits):
            if num_inits == 1:
                start = 0.5
            else:
                start = lo + k * (hi - lo) / (num_inits - 1)
            _ga_ascend(a, b, d, e, f, u, l, l1, start, step_length, accuracy,
                       margin, max_iters, &bk, &fk, &it, &ev)
            iters += it
            evals += ev
            if fk > best_f or (fk == best_f and bk < best_beta):
                best_beta = bk
                best_f = fk
    return best_beta, best_f, iters, evals


# -- closed-form path ---------------------------------------------------------

cdef inline double _cbrt(double x) nogil:
    return cbrt(x)   # libm cbrt is sign-symmetric already


cdef double _poly_eval(double *coeffs, int deg, double r) nogil:
    cdef double p = coeffs[0]
    cdef int i
    for i in range(1, deg + 1):
        p = p * r + coeffs[i]
    return p


cdef double _poly_polish(double *coeffs, int deg, double r) nogil:
    cdef double p, dp, rn
    cdef int i, step
    for step in range(3):
        p = coeffs[0]
        dp = 0.0
        for i in range(1, deg + 1):
            dp = dp * r + p
            p = p * r + coeffs[i]
        if p == 0.0 or dp == 0.0:
            break
        rn = r - p / dp
        if not isfinite(rn):
            break
        if fabs(_poly_eval(coeffs, deg, rn)) >= fabs(p):
            break
        r = rn
    return r


cdef int _cubic_real_roots(double b, double c, double d, double *out) nogil:
    cdef double shift = b / 3.0
    cdef double p = c - b * b / 3.0
    cdef double q = 2.0 * (b * b * b) / 27.0 - b * c / 3.0 + d
    cdef double ts[3]
    cdef int nt = 0
    cdef double disc, disc_scale, m, arg, theta, s
    cdef int k
    if p == 0.0 and q == 0.0:
        ts[0] = 0.0
        nt = 1
    else:
        disc = -4.0 * (p * p * p) - 27.0 * q * q
        disc_scale = fabs(4.0 * (p * p * p))
        if 27.0 * q * q > disc_scale:
            disc_scale = 27.0 * q * q
        if fabs(disc) <= 1e-12 * disc_scale and p != 0.0:
            ts[0] = 3.0 * q / p
            ts[1] = -3.0 * q / (2.0 * p)
            nt = 2
        elif disc > 0.0:
            m = 2.0 * sqrt(-p / 3.0)
            arg = 3.0 * q / (p * m)
            if arg > 1.0:
                arg = 1.0
            if arg < -1.0:
                arg = -1.0
            theta = acos(arg) / 3.0
            for k in range(3):
                ts[k] = m * cos(theta - 2.0 * M_PI * k / 3.0)
            nt = 3
        else:
            s = q * q / 4.0 + (p * p * p) / 27.0
            if s < 0.0:
                s = 0.0
            s = sqrt(s)
            ts[0] = _cbrt(-q / 2.0 + s) + _cbrt(-q / 2.0 - s)
            nt = 1
    for k in range(nt):
        out[k] = ts[k] - shift
    return nt


cdef int _quadratic_real_roots(double b, double c, double *out) nogil:
    cdef double disc = b * b - 4.0 * c
    cdef double s, qf, r1, r2
    if disc < 0.0:
        return 0
    s = sqrt(disc)
    if b >= 0.0:
        qf = -(b + s) / 2.0
    else:
        qf = -(b - s) / 2.0
    if qf == 0.0:
        out[0] = 0.0
        return 1
    r1 = qf
    r2 = c / qf
    if r1 == r2:
        out[0] = r1
        return 1
    out[0] = r1
    out[1] = r2
    return 2


cdef int _ferrari(double A, double B, double C, double D, double *out) nogil:
    cdef double res[3]
    cdef int nres = _cubic_real_roots(-B, A * C - 4.0 * D,
                                      -(A * A * D - 4.0 * B * D + C * C), res)
    cdef double gamma = res[0]
    cdef double best = A * A / 4.0 - B + gamma
    cdef double v, eta2, eta_split, p, r, s, base, mu2, center, half, imag, t, z
    cdef double zs[2]
    cdef int nz, i, n = 0
    cdef double sign_eta
    for i in range(1, nres):
        v = A * A / 4.0 - B + res[i]
        if v > best:
            best = v
            gamma = res[i]
    eta2 = A * A / 4.0 - B + gamma
    if eta2 > 0.0:
        eta_split = sqrt(eta2)
    else:
        eta_split = 0.0
    if eta_split < _ETA_SPLIT_TOL * (1.0 + fabs(A)):
        p = B - 3.0 * A * A / 8.0
        r = D - A * C / 4.0 + A * A * B / 16.0 - 3.0 * (A * A * A * A) / 256.0
        nz = _quadratic_real_roots(p, r, zs)
        for i in range(nz):
            z = zs[i]
            if z < 0.0:
                continue
            t = sqrt(z)
            out[n] = t - A / 4.0
            n += 1
            out[n] = -t - A / 4.0
            n += 1
        return n
    s = (4.0 * A * B - 8.0 * C - A * A * A) / (4.0 * eta_split)
    base = 3.0 * A * A / 4.0 - eta2 - 2.0 * B
    for i in range(2):
        if i == 0:
            sign_eta = 1.0
        else:
            sign_eta = -1.0
        mu2 = base + sign_eta * s
        center = -A / 4.0 + sign_eta * eta_split / 2.0
        if mu2 >= 0.0:
            half = sqrt(mu2) / 2.0
            out[n] = center + half
            n += 1
            out[n] = center - half
            n += 1
        else:
            imag = sqrt(-mu2) / 2.0
            if imag <= _IMAG_TOL * (1.0 + fabs(center)):
                out[n] = center
                n += 1
    return n


cdef int _quartic_real_roots(double K1, double K2, double K3, double K4,
                             double K5, double *roots, int *nroots) nogil:
    """Fills roots ascending; returns 1 on success, 0 when the residual
    check fails and the robust fallback should run instead."""
    cdef double ks[5]
    cdef double poly[5]
    cdef double cands[4]
    cdef double scale, lead, r, rm, pr
    cdef int lo = 0, deg, ncand, i, j, nkept = 0
    cdef bint dup
    ks[0] = K1
    ks[1] = K2
    ks[2] = K3
    ks[3] = K4
    ks[4] = K5
    while lo < 4:
        scale = 0.0
        for i in range(lo + 1, 5):
            if fabs(ks[i]) > scale:
                scale = fabs(ks[i])
        if fabs(ks[lo]) <= _DEGENERATE_RTOL * scale:
            lo += 1
        else:
            break
    deg = 4 - lo
    nroots[0] = 0
    if deg == 0:
        return 1
    lead = ks[lo]
    for i in range(deg + 1):
        poly[i] = ks[lo + i] / lead
    if deg == 1:
        cands[0] = -poly[1]
        ncand = 1
    elif deg == 2:
        ncand = _quadratic_real_roots(poly[1], poly[2], cands)
    elif deg == 3:
        ncand = _cubic_real_roots(poly[1], poly[2], poly[3], cands)
    else:
        ncand = _ferrari(poly[1], poly[2], poly[3], poly[4], cands)
    scale = 1.0
    for i in range(1, deg + 1):
        if fabs(poly[i]) > scale:
            scale = fabs(poly[i])
    for i in range(ncand):
        r = cands[i]
        if not isfinite(r):
            return 0
        r = _poly_polish(poly, deg, r)
        dup = False
        for j in range(nkept):
            if fabs(r - roots[j]) <= 1e-7 * (1.0 + fabs(r)):
                dup = True
                break
        if dup:
            continue
        rm = 1.0
        for j in range(deg):
            rm *= fabs(r)
        pr = fabs(_poly_eval(poly, deg, r))
        if pr > _RESIDUAL_RTOL * (1.0 + rm) * scale:
            return 0
        roots[nkept] = r
        nkept += 1
    # insertion sort (at most 4 entries)
    for i in range(1, nkept):
        r = roots[i]
        j = i - 1
        while j >= 0 and roots[j] > r:
            roots[j + 1] = roots[j]
            j -= 1
        roots[j + 1] = r
    nroots[0] = nkept
    return 1


def quartic_real_roots(double K1, double K2, double K3, double K4, double K5):
    cdef double roots[4]
    cdef int n = 0
    cdef int ok = _quartic_real_roots(K1, K2, K3, K4, K5, roots, &n)
    return [roots[i] for i in range(n)], bool(ok)


def tte_solve(double a, double b, double d, double e, double f,
              double u, double l, double l1, double beta0):
    """Closed-form solve: Taylor surrogate, quartic roots, argmax of the
    original objective over the clamped roots plus the endpoints."""
    cdef double r = l1 * beta0 * beta0 + l * beta0 + f
    cdef double rp, q0, q1, q2, q3, k1, k2, k3, k4
    cdef double roots[4]
    cdef double cands[6]
    cdef int nroots = 0, ncand, i, j, ok
    cdef double c, v, best_beta, best_f
    cdef bint dup
    cdef long evals
    if not r > 0.0:
        return 0.0, 0.0, 0, False
    rp = 2.0 * l1 * beta0 + l
    q0 = sqrt(r)
    q1 = rp / (2.0 * q0)
    q2 = l1 / q0 - rp * rp / (4.0 * r * q0)
    q3 = -3.0 * l1 * rp / (2.0 * r * q0) + 3.0 * (rp * rp * rp) / (8.0 * r * r * q0)
    k1 = e * q3 / 3.0
    k2 = e * q2 - e * beta0 * q3
    k3 = u + 2.0 * e * q1 - 2.0 * e * beta0 * q2 + e * (beta0 * beta0) * q3
    k4 = (d + 2.0 * e * q0 - 2.0 * e * beta0 * q1
          + e * (beta0 * beta0) * q2 - e * (beta0 * beta0 * beta0) * q3 / 3.0)
    ok = _quartic_real_roots(3.0 * b * k1,
                             2.0 * b * k2 + 4.0 * a * k1,
                             b * k3 + 3.0 * a * k2,
                             2.0 * a * k3,
                             a * k4,
                             roots, &nroots)
    if not ok:
        return 0.0, 0.0, 0, False
    cands[0] = 0.0
    cands[1] = 1.0
    ncand = 2
    for i in range(nroots):
        c = _clamp(roots[i], 0.0, 1.0)
        dup = False
        for j in range(ncand):
            if fabs(c - cands[j]) <= 1e-12:
                dup = True
                break
        if not dup:
            cands[ncand] = c
            ncand += 1
    best_beta = cands[0]
    best_f = _f_value(a, b, d, e, f, u, l, l1, cands[0])
    evals = 1
    for i in range(1, ncand):
        v = _f_value(a, b, d, e, f, u, l, l1, cands[i])
        evals += 1
        if v > best_f or (v == best_f and cands[i] < best_beta):
            best_beta = cands[i]
            best_f = v
    return best_beta, best_f, evals, True
