import math

import numpy as np
import pytest
from hypothesis import given, settings

from hopfield_transport import (
    SystemParams,
    bose_einstein,
    decay_rates,
    heat_current_gme,
    heat_current_lme,
    heat_current_time_dependent,
    second_law_audit,
    transmission_lines,
)
from hopfield_transport.dissipation import bath_channels, steady_populations
from hopfield_transport.errors import DomainError
from hopfield_transport.hopfield import spectrum
from hopfield_transport.transport import landauer_current, left_current_from_populations, lme_plateau

from conftest import random_params, system_params

RES = SystemParams(1.0, 1.0, 0.1, 0.05, 0.05, 5.0, 0.5)
OFF = RES.replace(omega_b=0.2)


def test_equilibrium_has_no_current():
    assert heat_current_gme(RES.replace(T_R=5.0)).j_left == 0.0


def test_disconnected_bath_has_no_current():
    assert heat_current_gme(RES.replace(gamma_R=0.0)).j_left == 0.0
    assert heat_current_gme(RES.replace(gamma_L=0.0, gamma_R=0.0)).j_left == 0.0


def test_report_fields():
    r = heat_current_gme(RES)
    assert r.j_right == -r.j_left
    assert sum(r.per_polariton) == pytest.approx(r.j_left, rel=1e-15)
    assert r.entropy_production == pytest.approx(r.j_left * (1 / 0.5 - 1 / 5.0))
    assert r.lme_current == heat_current_lme(RES).current


def test_entropy_not_applicable_at_zero_temperature():
    r = heat_current_gme(RES.replace(T_L=0.0, T_R=0.0))
    assert r.entropy_production is None
    with pytest.raises(DomainError):
        second_law_audit(RES.replace(T_L=0.0, T_R=0.0))


def test_offres_rises_peaks_and_decays():
    g = np.geomspace(1e-3, 1e2, 300)
    j = np.array([heat_current_gme(OFF.replace(g=x)).j_left for x in g])
    k = int(np.argmax(j))
    assert 0 < k < len(g) - 1
    assert np.all(np.diff(j[: k + 1]) > 0) and np.all(np.diff(j[k:]) < 0)
    gg = np.geomspace(10, 100, 20)
    jj = [heat_current_gme(OFF.replace(g=x)).j_left for x in gg]
    assert np.polyfit(np.log(gg), np.log(jj), 1)[0] == pytest.approx(-1.0, abs=0.1)


def test_monotone_suppression_in_dsc():
    g = np.geomspace(5, 100, 50)
    j = [heat_current_gme(OFF.replace(g=x)).j_left for x in g]
    assert np.all(np.diff(j) < 0)


def test_resonant_small_coupling_plateau():
    j3 = heat_current_gme(RES.replace(g=1e-3)).j_left
    j2 = heat_current_gme(RES.replace(g=1e-2)).j_left
    assert abs(j3 / j2 - 1) < 0.01
    plateau = lme_plateau(RES)
    assert abs(j3 / plateau - 1) < 0.02 and abs(j2 / plateau - 1) < 0.02


def test_steady_current_from_populations_matches():
    # independent path: instantaneous current at the closed-form steady populations
    for p in random_params(np.random.default_rng(11), 300):
        j = heat_current_gme(p).j_left
        alt = left_current_from_populations(p, *steady_populations(p))
        assert alt == pytest.approx(j, rel=1e-10, abs=1e-15)


class TestTimeDependent:
    def test_initial_absorption(self):
        s = spectrum(RES)
        ch = bath_channels(RES)
        expected = (2 * s.omega_x * ch.kappa_Lx * bose_einstein(s.omega_x, 5.0)
                    + 2 * s.omega_y * ch.kappa_Ly * bose_einstein(s.omega_y, 5.0))
        assert heat_current_time_dependent(RES, 0.0) == pytest.approx(expected, rel=1e-14)

    def test_converges_to_steady_state(self):
        for p in (RES, OFF, RES.replace(g=2.0)):
            d = decay_rates(p)
            t = 15.0 / min(d.gamma_x, d.gamma_y)
            assert abs(heat_current_time_dependent(p, t) - heat_current_gme(p).j_left) < 1e-10

    def test_equilibrium_long_time(self):
        p = RES.replace(T_R=5.0)
        d = decay_rates(p)
        assert abs(heat_current_time_dependent(p, 40.0 / min(d.gamma_x, d.gamma_y))) < 1e-12


class TestTransmission:
    def test_disconnected_bath(self):
        assert [line.weight for line in transmission_lines(RES.replace(gamma_R=0.0))] == [0.0, 0.0]

    def test_resonant_weak_coupling_half_gamma(self):
        lines = transmission_lines(RES.replace(g=1e-7))
        for line in lines:
            assert line.weight == pytest.approx(0.05 / 2, rel=1e-6)
            assert line.frequency == pytest.approx(1.0, rel=1e-6)

    def test_landauer_reconstruction(self):
        for p in random_params(np.random.default_rng(5), 1000):
            lines = transmission_lines(p)
            assert all(line.weight >= 0 for line in lines)
            assert landauer_current(p, lines) == pytest.approx(heat_current_gme(p).j_left, rel=1e-12, abs=1e-300)


class TestLME:
    def test_equal_occupations(self):
        assert heat_current_lme(RES.replace(T_R=5.0)).current == 0.0

    def test_large_coupling_plateau(self):
        p = OFF.replace(g=1e4)
        expected = 2 * 1.0 * 0.05 * 0.05 / 0.1 * (bose_einstein(1.0, 5.0) - bose_einstein(0.2, 0.5))
        assert heat_current_lme(p).current == pytest.approx(expected, rel=1e-8)
        assert lme_plateau(p) == pytest.approx(expected, rel=1e-15)
        assert expected != 0.0

    def test_validity_flag(self):
        assert heat_current_lme(RES.replace(g=0.01)).validity_warning is False
        assert heat_current_lme(RES.replace(g=1.0)).validity_warning is True

    def test_cold_to_hot_flow(self):
        # w_b / T_R = 0.4 < w_c / T_L = 1: the local equation pumps heat into the hot bath
        p = SystemParams(5.0, 0.2, 1.0, 0.05, 0.05, 5.0, 0.5)
        assert heat_current_lme(p).current < 0


class TestSecondLaw:
    @pytest.mark.parametrize("wc,wb,TL,TR,fires", [
        (5.0, 1.0, 5.0, 0.5, False),
        (5.0, 1.0, 10.0, 0.5, False),
        (5.0, 0.2, 5.0, 0.5, True),
    ])
    def test_predicate_examples(self, wc, wb, TL, TR, fires):
        a = second_law_audit(SystemParams(wc, wb, 1.0, 0.05, 0.05, TL, TR))
        assert a.lme_violation_predicate is fires
        assert a.lme_cold_to_hot is fires
        assert (a.lme_current < 0) is fires

    def test_equilibrium(self):
        assert second_law_audit(RES.replace(T_R=5.0)).entropy_production == 0.0

    @settings(max_examples=300, deadline=None)
    @given(system_params())
    def test_gme_never_violates(self, p):
        r = heat_current_gme(p)
        assert r.entropy_production >= -1e-14
        assert abs(r.j_left + r.j_right) <= 1e-12 * max(abs(r.j_left), p.omega_c ** 2)
        if p.T_L != p.T_R:
            assert math.copysign(1.0, r.j_left) == math.copysign(1.0, p.T_L - p.T_R) or r.j_left == 0.0
