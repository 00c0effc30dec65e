import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from airpa import QuarticCoefficients, RootSet, solve_cubic, solve_quartic


def companion_real_roots(poly, imag_tol=1e-7, cluster_tol=1e-7):
    """Independent oracle: eigenvalues of the companion matrix (np.roots),
    filtered to the real axis and clustered like the production output."""
    roots = sorted(z.real for z in np.roots(poly)
                   if abs(z.imag) <= imag_tol * (1.0 + abs(z)))
    out = []
    for r in roots:
        if out and abs(r - out[-1]) <= cluster_tol * (1.0 + abs(r)):
            continue
        out.append(r)
    return out


def assert_matches_oracle(got, oracle, tol=1e-6):
    assert len(got) == len(oracle), (got, oracle)
    for r, o in zip(got, oracle):
        assert abs(r - o) <= tol * (1.0 + abs(o)), (got, oracle)


class TestCubic:
    def test_unit(self):
        assert solve_cubic(0.0, 0.0, -1.0) == pytest.approx([1.0], abs=1e-12)

    def test_factorable(self):
        assert solve_cubic(-6.0, 11.0, -6.0) == pytest.approx([1.0, 2.0, 3.0], abs=1e-10)

    def test_negative_real_cube_root(self):
        # x^3 + 8 = 0 exercises the sign-symmetric cube root
        assert solve_cubic(0.0, 0.0, 8.0) == pytest.approx([-2.0], abs=1e-12)

    def test_casus_irreducibilis(self):
        # x^3 - 3x + 1: three real roots, complex Cardano intermediates
        got = solve_cubic(0.0, -3.0, 1.0)
        assert_matches_oracle(got, companion_real_roots([1.0, 0.0, -3.0, 1.0]), 1e-10)

    def test_triple_root(self):
        # (x - 2)^3 = x^3 - 6x^2 + 12x - 8
        got = solve_cubic(-6.0, 12.0, -8.0)
        assert got == pytest.approx([2.0], abs=1e-4)   # triple roots are ill-conditioned

    def test_random_vs_companion(self):
        rng = np.random.default_rng(3)
        for _ in range(500):
            b, c, d = rng.uniform(-5, 5, size=3)
            got = solve_cubic(b, c, d)
            assert_matches_oracle(got, companion_real_roots([1.0, b, c, d]), 1e-10)


def quartic_residual_ok(q: QuarticCoefficients, rs: RootSet) -> bool:
    scale = max(1.0, abs(q.A), abs(q.B), abs(q.C), abs(q.D))
    for r in rs.real_roots:
        val = abs(((r + q.A) * r + q.B) * r * r + q.C * r + q.D)
        if val > 1e-8 * (1.0 + abs(r) ** 4) * scale:
            return False
    return True


class TestQuartic:
    def test_biquadratic(self):
        got = solve_quartic(QuarticCoefficients.monic(0.0, -10.0, 0.0, 9.0))
        assert got.real_roots == pytest.approx([-3.0, -1.0, 1.0, 3.0], abs=1e-10)

    def test_all_zero(self):
        got = solve_quartic(QuarticCoefficients.monic(0.0, 0.0, 0.0, 0.0))
        assert got.real_roots == pytest.approx([0.0], abs=1e-12)

    def test_expanded_product(self):
        # (x - 0.3)(x - 0.6)(x + 1)(x - 2)
        poly = np.poly([0.3, 0.6, -1.0, 2.0])
        got = solve_quartic(QuarticCoefficients.monic(*poly[1:]))
        assert got.real_roots == pytest.approx([-1.0, 0.3, 0.6, 2.0], abs=1e-10)
        assert_matches_oracle(got.real_roots, companion_real_roots(list(poly)))

    def test_double_root(self):
        poly = np.poly([1.0, 1.0, -2.0, -3.0])
        got = solve_quartic(QuarticCoefficients.monic(*poly[1:]))
        assert got.real_roots == pytest.approx([-3.0, -2.0, 1.0], abs=1e-6)

    def test_squared_quadratic(self):
        # (x^2 - 1)^2: eta_split degenerates, biquadratic branch
        got = solve_quartic(QuarticCoefficients.monic(0.0, -2.0, 0.0, 1.0))
        assert got.real_roots == pytest.approx([-1.0, 1.0], abs=1e-6)

    def test_no_real_roots(self):
        got = solve_quartic(QuarticCoefficients.monic(0.0, 0.0, 0.0, 1.0))
        assert got.real_roots == []

    def test_degenerate_leading(self):
        # K1 ~ 0: delegates to the cubic (x-1)^2 (x+1)
        got = solve_quartic(QuarticCoefficients(1e-20, 1.0, -1.0, -1.0, 1.0))
        assert got.real_roots == pytest.approx([-1.0, 1.0], abs=1e-6)

    def test_degenerate_to_quadratic_and_linear(self):
        got = solve_quartic(QuarticCoefficients(0.0, 0.0, 1.0, -3.0, 2.0))
        assert got.real_roots == pytest.approx([1.0, 2.0], abs=1e-10)
        got = solve_quartic(QuarticCoefficients(0.0, 0.0, 0.0, 2.0, -1.0))
        assert got.real_roots == pytest.approx([0.5], abs=1e-12)

    def test_residual_invariant_random_sweep(self):
        """Log-uniform magnitude draws: residual bound plus companion-matrix
        agreement (root sets paired within 1e-6)."""
        rng = np.random.default_rng(17)
        for _ in range(2000):
            mag = 10.0 ** rng.uniform(-3, 3, size=4)
            coef = mag * rng.choice([-1.0, 1.0], size=4)
            q = QuarticCoefficients.monic(*coef)
            rs = solve_quartic(q)
            assert quartic_residual_ok(q, rs)
            oracle = companion_real_roots([1.0, *coef])
            assert_matches_oracle(rs.real_roots, oracle)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.floats(min_value=-1e3, max_value=1e3), min_size=4, max_size=4))
    def test_residual_property(self, coef):
        q = QuarticCoefficients.monic(*coef)
        rs = solve_quartic(q)
        assert quartic_residual_ok(q, rs)

    def test_reported_residuals_match(self):
        q = QuarticCoefficients.monic(-1.3, -7.0, 10.0, 1.0)
        rs = solve_quartic(q)
        assert rs.real_roots
        for r, resid in zip(rs.real_roots, rs.residuals):
            val = abs(((r + q.A) * r + q.B) * r * r + q.C * r + q.D)
            # same quantity, different Horner grouping: only rounding differs
            assert resid == pytest.approx(val, abs=1e-12)
