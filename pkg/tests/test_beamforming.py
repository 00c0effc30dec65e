import numpy as np
import pytest

from airpa import (Scenario, compute_coefficients, compute_rho,
                   design_beamforming, generate_channels, solve_es, trial_seed)
from airpa.beamforming import BeamformingDesign, DegenerateChannelError
from airpa.channels import ChannelRealization


def cascade_scalar(design, ch):
    # theta~^H G H_si v with G = diag(g^H)
    return complex(np.sum(np.conj(design.theta_tilde) * np.conj(ch.g)
                          * (ch.H_si @ design.v)))


class TestDesign:
    def test_unit_norms(self, draws16):
        for _, _, design, _ in draws16[:50]:
            assert abs(np.linalg.norm(design.v) - 1.0) <= 1e-12
            assert abs(np.linalg.norm(design.theta_tilde) - 1.0) <= 1e-12

    def test_m1_scalar_mrt(self):
        ch = generate_channels(Scenario(num_bs_antennas=1, num_irs_elements=4), 3)
        design = design_beamforming(ch)
        assert abs(abs(design.v[0]) - 1.0) <= 1e-12

    def test_phase_alignment(self, draws16):
        for _, ch, design, _ in draws16[:100]:
            phi_c = np.angle(cascade_scalar(design, ch))
            phi_h = np.angle(np.vdot(ch.h, design.v))
            diff = (phi_c - phi_h + np.pi) % (2 * np.pi) - np.pi
            assert abs(diff) <= 1e-9

    def test_cross_coefficient_nonnegative(self, draws16):
        for _, _, _, coeffs in draws16:
            assert coeffs.e >= 0.0

    def test_rejects_zero_direct_channel(self):
        scen = Scenario(num_bs_antennas=2, num_irs_elements=4)
        ch = generate_channels(scen, 9)
        dead = ChannelRealization(H_si=ch.H_si.copy(), g=ch.g.copy(),
                                  h=np.zeros(2, dtype=complex), seed_used=9)
        with pytest.raises(DegenerateChannelError):
            design_beamforming(dead)

    def test_designed_beats_random(self):
        """Sanity of the fixed design: mean optimal rate under the coherent
        design exceeds a random unit-norm (v, theta~) on the same draws."""
        scen = Scenario(num_irs_elements=32)
        rng = np.random.default_rng(77)
        designed, randomized = [], []
        for t in range(200):
            ch = generate_channels(scen, trial_seed(21, t))
            designed.append(solve_es(
                compute_coefficients(scen, ch, design_beamforming(ch)), 2001).rate_bits)
            v = rng.standard_normal(1) + 1j * rng.standard_normal(1)
            th = rng.standard_normal(32) + 1j * rng.standard_normal(32)
            rand = BeamformingDesign(v=v / np.linalg.norm(v),
                                     theta_tilde=th / np.linalg.norm(th))
            randomized.append(solve_es(
                compute_coefficients(scen, ch, rand), 2001).rate_bits)
        assert np.mean(designed) > np.mean(randomized)


class TestRho:
    def test_full_bs_power(self):
        assert compute_rho(1.0, 1.0, 1e-9, 1e-13) == 0.0

    def test_zero_bs_power(self):
        assert compute_rho(2.0, 0.0, 1e-9, 1e-13) == pytest.approx(
            np.sqrt(2.0 / 1e-13), rel=1e-12)

    def test_direct_substitution(self):
        # rho^2 * (beta P T + sI2) must equal (1 - beta) P; cross-checked value
        rho = compute_rho(1.0, 0.5, 1e-9, 1e-13)
        assert rho == pytest.approx(np.sqrt(0.5 / (0.5e-9 + 1e-13)), rel=1e-12)

    def test_monotone_decreasing(self):
        betas = np.linspace(0.0, 1.0, 21)
        rhos = compute_rho(1.0, betas, 1e-9, 1e-13)
        assert np.all(np.diff(rhos) < 0.0)

    def test_rejects_bad_beta(self):
        with pytest.raises(ValueError):
            compute_rho(1.0, 1.5, 1e-9, 1e-13)

    def test_power_balance(self, draws16):
        """beta P rho^2 T + sI2 rho^2 == (1-beta) P across the grid."""
        betas = np.linspace(0.0, 1.0, 41)
        for scen, ch, design, coeffs in draws16[:50]:
            T = coeffs.norm_tm2
            P = scen.total_power
            rho2 = compute_rho(P, betas, T, scen.irs_noise_power) ** 2
            reflected = betas * P * rho2 * T + scen.irs_noise_power * rho2
            target = (1.0 - betas) * P
            assert np.all(np.abs(reflected - target) <= 1e-9 * (1.0 + target))
