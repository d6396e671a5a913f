"""Heat transport through the junction.

Sign convention: a positive left current is energy entering the system from
the left bath.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .dissipation import (
    bath_channels,
    bose_einstein,
    gme_validity_warning,
    lme_validity_warning,
    polariton_populations,
)
from .errors import DomainError
from .hopfield import spectrum
from .params import SystemParams


@dataclass(frozen=True)
class TransmissionLine:
    frequency: float
    weight: float


@dataclass(frozen=True)
class LMECurrent:
    current: float
    validity_warning: bool


@dataclass(frozen=True)
class TransportReport:
    j_left: float
    j_right: float
    per_polariton: tuple[float, float]
    # None when a bath sits at T = 0 and 1/T is undefined
    entropy_production: float | None
    gme_validity_warning: bool
    lme: LMECurrent | None = None

    @property
    def lme_current(self) -> float | None:
        return None if self.lme is None else self.lme.current


def _inv_sq(x: float) -> float:
    return math.inf if x == 0.0 else 1.0 / (x * x)


def _line_weight(p: SystemParams, omega: float, theta_j: float) -> float:
    gL = p.left_bath.coupling(omega, p.omega_c)
    gR = p.right_bath.coupling(omega, p.omega_c)
    if gL == 0.0 or gR == 0.0:
        return 0.0
    den = gL * (p.omega_b / omega) * _inv_sq(math.cos(theta_j)) + gR * (omega / p.omega_c) * _inv_sq(math.sin(theta_j))
    return 2.0 * gL * gR / den


def transmission_lines(p: SystemParams) -> list[TransmissionLine]:
    """Delta-function lines of the Landauer transmission, upper polariton first."""
    spec = spectrum(p)
    theta_x = spec.theta + math.pi / 2
    theta_y = spec.theta
    return [
        TransmissionLine(spec.omega_x, _line_weight(p, spec.omega_x, theta_x)),
        TransmissionLine(spec.omega_y, _line_weight(p, spec.omega_y, theta_y)),
    ]


def landauer_current(p: SystemParams, lines: list[TransmissionLine] | None = None) -> float:
    lines = transmission_lines(p) if lines is None else lines
    total = 0.0
    for line in lines:
        if line.weight == 0.0:
            continue
        dn = bose_einstein(line.frequency, p.T_L) - bose_einstein(line.frequency, p.T_R)
        total += line.weight * line.frequency * dn
    return total


def entropy_production(j_left: float, T_L: float, T_R: float) -> float:
    """Steady-state entropy production rate ``J_L (1/T_R - 1/T_L)``."""
    if T_L <= 0 or T_R <= 0:
        raise DomainError("entropy production needs both bath temperatures > 0")
    return j_left * (1.0 / T_R - 1.0 / T_L)


def heat_current_gme(p: SystemParams, include_lme: bool = True) -> TransportReport:
    """Steady-state heat currents from the global master equation.

    Each polariton ``j`` contributes
    ``2 w_j gL gR / (gL (w_b/w_j) sec^2 th_j + gR (w_j/w_c) csc^2 th_j) * dn_j``
    with ``th_x = theta + pi/2`` and ``th_y = theta``.
    """
    spec = spectrum(p)
    per = []
    for omega, theta_j in ((spec.omega_x, spec.theta + math.pi / 2), (spec.omega_y, spec.theta)):
        gL = p.left_bath.coupling(omega, p.omega_c)
        gR = p.right_bath.coupling(omega, p.omega_c)
        if gL == 0.0 or gR == 0.0:
            per.append(0.0)
            continue
        sec2 = _inv_sq(math.cos(theta_j))
        csc2 = _inv_sq(math.sin(theta_j))
        den = gL * p.omega_b / omega * sec2 + gR * omega / p.omega_c * csc2
        dn = bose_einstein(omega, p.T_L) - bose_einstein(omega, p.T_R)
        per.append(2.0 * omega * gL * gR / den * dn)
    j_left = per[0] + per[1]
    pi_ss = entropy_production(j_left, p.T_L, p.T_R) if (p.T_L > 0 and p.T_R > 0) else None
    return TransportReport(
        j_left=j_left,
        j_right=-j_left,
        per_polariton=(per[0], per[1]),
        entropy_production=pi_ss,
        gme_validity_warning=gme_validity_warning(p),
        lme=heat_current_lme(p) if include_lme else None,
    )


def left_current_from_populations(p: SystemParams, n_upper: float, n_lower: float) -> float:
    """Left-bath heat current for given instantaneous polariton populations."""
    spec = spectrum(p)
    ch = bath_channels(p, spec)
    out = 0.0
    if ch.kappa_Lx:
        out += 2.0 * spec.omega_x * ch.kappa_Lx * (bose_einstein(spec.omega_x, p.T_L) - n_upper)
    if ch.kappa_Ly:
        out += 2.0 * spec.omega_y * ch.kappa_Ly * (bose_einstein(spec.omega_y, p.T_L) - n_lower)
    return out


def heat_current_time_dependent(p: SystemParams, t: float) -> float:
    """Left-bath heat current at time ``t`` after starting from the polariton vacuum."""
    n_upper, n_lower = polariton_populations(p, t)
    return left_current_from_populations(p, n_upper, n_lower)


def heat_current_lme(p: SystemParams) -> LMECurrent:
    """Local (rotating-wave) master equation benchmark; uses bare frequencies."""
    gL, gR, g = p.gamma_L, p.gamma_R, p.g
    warn = lme_validity_warning(p)
    if gL == 0.0 or gR == 0.0 or g == 0.0:
        return LMECurrent(0.0, warn)
    dn = bose_einstein(p.omega_c, p.T_L) - bose_einstein(p.omega_b, p.T_R)
    prefactor = 2.0 * p.omega_c * 4.0 * g * g * gL * gR / ((gL + gR) * (gL * gR + 4.0 * g * g))
    return LMECurrent(prefactor * dn, warn)


def lme_plateau(p: SystemParams) -> float:
    """Large-coupling limit of the local master equation current."""
    gL, gR = p.gamma_L, p.gamma_R
    if gL == 0.0 or gR == 0.0:
        return 0.0
    dn = bose_einstein(p.omega_c, p.T_L) - bose_einstein(p.omega_b, p.T_R)
    return 2.0 * p.omega_c * gL * gR / (gL + gR) * dn


@dataclass(frozen=True)
class SecondLawAudit:
    entropy_production: float
    lme_current: float
    lme_violation_predicate: bool
    lme_cold_to_hot: bool


def second_law_audit(p: SystemParams) -> SecondLawAudit:
    """Entropy-production audit of the GME and the LME violation check.

    ``lme_violation_predicate`` is the closed-form condition
    ``w_b / T_R < w_c / T_L``; ``lme_cold_to_hot`` is read off the sign of the
    LME current relative to the temperature ordering.
    """
    if p.T_L <= 0 or p.T_R <= 0:
        raise DomainError("second-law audit needs both bath temperatures > 0")
    report = heat_current_gme(p, include_lme=False)
    lme = heat_current_lme(p).current
    hot_sign = math.copysign(1.0, p.T_L - p.T_R) if p.T_L != p.T_R else 0.0
    cold_to_hot = lme != 0.0 and hot_sign != 0.0 and math.copysign(1.0, lme) != hot_sign
    return SecondLawAudit(
        entropy_production=report.entropy_production,
        lme_current=lme,
        lme_violation_predicate=p.omega_b / p.T_R < p.omega_c / p.T_L,
        lme_cold_to_hot=cold_to_hot,
    )
