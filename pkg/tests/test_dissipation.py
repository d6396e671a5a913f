import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfield_transport import (
    SystemParams,
    bose_einstein,
    decay_rates,
    gme_rates,
    polariton_populations,
    purcell_dsc_asymptote,
    purcell_weak_asymptote,
)
from hopfield_transport.dissipation import gme_validity_warning, lme_validity_warning, steady_populations
from hopfield_transport.errors import DegenerateError, DomainError
from hopfield_transport.hopfield import spectrum

from conftest import random_params, system_params

FIG2 = SystemParams(omega_c=1.0, omega_b=0.97, gamma_L=1.0, gamma_R=0.0)
FIG3 = SystemParams(1.0, 1.0, 0.1, 0.05, 0.05, 5.0, 0.5)


class TestBoseEinstein:
    def test_vacuum(self):
        assert bose_einstein(1.0, 0.0) == 0.0

    def test_against_high_precision(self):
        mpmath.mp.dps = 40
        exact = float(1 / (mpmath.exp(mpmath.mpf(1) / 5) - 1))
        assert bose_einstein(1.0, 5.0) == pytest.approx(exact, rel=1e-15)
        assert bose_einstein(1.0, 5.0) == pytest.approx(4.51665, abs=1e-5)

    def test_classical_limit(self):
        w, T = 1e-8, 0.5
        series = T / w - 0.5 + w / (12 * T)
        assert bose_einstein(w, T) == pytest.approx(series, rel=1e-12)
        assert bose_einstein(w, T) == pytest.approx(5e7, rel=1e-7)

    def test_overflow_returns_zero(self):
        assert bose_einstein(701.0, 1.0) == 0.0
        assert bose_einstein(699.0, 1.0) > 0.0

    def test_array_input(self):
        out = bose_einstein(np.array([1.0, 2.0, 800.0]), np.array([5.0, 0.0, 1.0]))
        assert out[0] == pytest.approx(bose_einstein(1.0, 5.0))
        assert out[1] == 0.0 and out[2] == 0.0

    @pytest.mark.parametrize("w", [0.0, -1.0])
    def test_domain(self, w):
        with pytest.raises(DomainError):
            bose_einstein(w, 1.0)


class TestRates:
    def test_zero_temperature_has_no_absorption(self):
        r = gme_rates(FIG3.replace(T_L=0.0, T_R=0.0))
        assert r.alpha2 == 0.0 and r.beta2 == 0.0
        assert r.alpha1 > 0 and r.beta1 > 0

    def test_closed_system(self):
        r = gme_rates(FIG3.replace(gamma_L=0.0, gamma_R=0.0))
        assert (r.alpha1, r.alpha2, r.beta1, r.beta2) == (0.0, 0.0, 0.0, 0.0)

    def test_fig3_term_by_term(self):
        # independent path: mode weights from the trigonometric identities
        s = spectrum(FIG3)
        c2, s2 = math.cos(s.theta) ** 2, math.sin(s.theta) ** 2
        wc, wb, wx, wy = 1.0, 1.0, s.omega_x, s.omega_y
        n = lambda w, T: 1.0 / math.expm1(w / T)
        a1 = 0.05 * wc / wx * c2 * (n(wx, 5) + 1) + 0.05 * wx / wb * s2 * (n(wx, 0.5) + 1)
        a2 = 0.05 * wc / wx * c2 * n(wx, 5) + 0.05 * wx / wb * s2 * n(wx, 0.5)
        b1 = 0.05 * wc / wy * s2 * (n(wy, 5) + 1) + 0.05 * wy / wb * c2 * (n(wy, 0.5) + 1)
        b2 = 0.05 * wc / wy * s2 * n(wy, 5) + 0.05 * wy / wb * c2 * n(wy, 0.5)
        r = gme_rates(FIG3)
        assert (r.alpha1, r.alpha2, r.beta1, r.beta2) == pytest.approx((a1, a2, b1, b2), rel=1e-13)

    def test_ohmic_policy(self):
        p = FIG3.replace(spectral_density="ohmic", g=0.5)
        s = spectrum(p)
        flat = decay_rates(p.replace(spectral_density="flat"))
        ohm = decay_rates(p)
        # both baths share gamma, so each rate scales by omega_j / omega_c
        assert ohm.gamma_x == pytest.approx(flat.gamma_x * s.omega_x, rel=1e-13)
        assert ohm.gamma_y == pytest.approx(flat.gamma_y * s.omega_y, rel=1e-13)

    @settings(max_examples=200, deadline=None)
    @given(system_params())
    def test_detailed_balance_ordering(self, p):
        r = gme_rates(p)
        assert r.alpha1 > r.alpha2 >= 0
        assert r.beta1 > r.beta2 >= 0


class TestDecayRates:
    def test_single_bath_reduction(self):
        p = FIG3.replace(gamma_R=0.0, g=0.3, omega_b=0.8)
        s = spectrum(p)
        d = decay_rates(p)
        assert d.gamma_x == pytest.approx(0.05 * math.cos(s.theta) ** 2 / s.omega_x, rel=1e-13)
        assert d.gamma_y == pytest.approx(0.05 * math.sin(s.theta) ** 2 / s.omega_y, rel=1e-13)

    def test_small_coupling_limit(self):
        d = decay_rates(FIG2.replace(g=1e-9))
        assert d.gamma_x == pytest.approx(1.0, abs=1e-12)
        assert d.gamma_y == pytest.approx(0.0, abs=1e-12)

    def test_quadratic_growth_deep_in_weak_window(self):
        # the quadratic law holds once g is well below the detuning
        g = np.geomspace(1e-5, 1e-4, 20)
        gy = [decay_rates(FIG2.replace(g=x)).gamma_y for x in g]
        slope = np.polyfit(np.log(g), np.log(gy), 1)[0]
        assert slope == pytest.approx(2.0, abs=0.01)

    def test_dsc_asymptote_overlap(self):
        p = FIG2.replace(g=10.0)
        d = decay_rates(p)
        ref = purcell_dsc_asymptote(p)
        assert abs(d.gamma_x / ref - 1) < 0.05
        assert abs(d.gamma_y / ref - 1) < 0.05

    def test_temperature_independence(self):
        rng = np.random.default_rng(7)
        base = FIG3.replace(g=0.7, omega_b=0.6)
        ref = decay_rates(base)
        for TL, TR in rng.uniform(0.0, 10.0, size=(100, 2)):
            p = base.replace(T_L=TL, T_R=TR)
            d = decay_rates(p)
            assert d.gamma_x == pytest.approx(ref.gamma_x, rel=1e-14)
            assert d.gamma_y == pytest.approx(ref.gamma_y, rel=1e-14)
            r = gme_rates(p)
            assert r.alpha1 - r.alpha2 == pytest.approx(ref.gamma_x, rel=1e-12)
            assert r.beta1 - r.beta2 == pytest.approx(ref.gamma_y, rel=1e-12)

    def test_dsc_slowdown(self):
        for getter in (lambda d: d.gamma_x, lambda d: d.gamma_y):
            vals = [getter(decay_rates(FIG2.replace(g=g))) * g for g in (50.0, 500.0)]
            assert abs(vals[1] / vals[0] - 1) < 0.02


class TestAsymptotes:
    def test_weak_value(self):
        val = purcell_weak_asymptote(FIG2.replace(g=1e-3))
        assert val == pytest.approx(4e-6 / (1 - 0.97 ** 2) ** 2, rel=1e-14)
        assert val == pytest.approx(0.0011452, rel=1e-4)

    def test_dsc_value(self):
        val = purcell_dsc_asymptote(FIG2.replace(g=10.0))
        assert val == pytest.approx(0.1 * 0.9409 * math.sqrt(0.97) / 1.9409, rel=1e-14)
        assert val == pytest.approx(0.047746, abs=2e-6)

    def test_weak_undefined_at_resonance(self):
        with pytest.raises(DomainError):
            purcell_weak_asymptote(SystemParams(1.0, 1.0, 0.1, 1.0))

    def test_dsc_undefined_at_zero_coupling(self):
        with pytest.raises(DomainError):
            purcell_dsc_asymptote(FIG2)


class TestPopulations:
    def test_start_from_vacuum(self):
        assert polariton_populations(FIG3, 0.0) == (0.0, 0.0)

    def test_equal_temperatures_give_gibbs(self):
        p = FIG3.replace(T_R=5.0, g=0.4)
        s = spectrum(p)
        nx, ny = steady_populations(p)
        assert nx == pytest.approx(bose_einstein(s.omega_x, 5.0), rel=1e-12)
        assert ny == pytest.approx(bose_einstein(s.omega_y, 5.0), rel=1e-12)

    def test_single_bath_thermalises(self):
        for p in random_params(np.random.default_rng(3), 50):
            p = p.replace(gamma_R=0.0)
            s = spectrum(p)
            nx, ny = steady_populations(p)
            assert nx == pytest.approx(bose_einstein(s.omega_x, p.T_L), rel=1e-12)
            assert ny == pytest.approx(bose_einstein(s.omega_y, p.T_L), rel=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(system_params(), st.floats(0.01, 5.0))
    def test_relaxation_exponent_is_twice_decay_rate(self, p, frac):
        d = decay_rates(p)
        t = frac / d.gamma_x
        nx, _ = polariton_populations(p, t)
        nx_inf, _ = steady_populations(p)
        assert -math.log1p(-nx / nx_inf) == pytest.approx(2 * d.gamma_x * t, rel=1e-8)

    def test_decoupled_mode_has_no_steady_state(self):
        p = FIG3.replace(g=0.0, gamma_R=0.0)
        with pytest.raises(DegenerateError):
            steady_populations(p)
        assert polariton_populations(p, 3.0)[1] == 0.0

    def test_negative_time(self):
        with pytest.raises(DomainError):
            polariton_populations(FIG3, -1.0)


def test_validity_flags():
    assert gme_validity_warning(SystemParams(1.0, 1.0, 0.01, 0.05, 0.05))
    assert not gme_validity_warning(SystemParams(1.0, 0.5, 0.01, 0.05, 0.05))
    assert not gme_validity_warning(SystemParams(1.0, 1.0, 0.1, 0.05, 0.05))
    assert lme_validity_warning(SystemParams(1.0, 1.0, 0.1, 0.05, 0.05))
    assert not lme_validity_warning(SystemParams(1.0, 1.0, 0.01, 0.05, 0.05))
