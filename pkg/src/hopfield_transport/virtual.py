"""Virtual-photon content of the dressed ground and steady states."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .dissipation import steady_populations
from .errors import DegenerateError, DomainError
from .hopfield import bogoliubov_coefficients
from .params import SystemParams


class Regime(str, enum.Enum):
    WEAK = "weak"
    USC = "usc"
    DSC = "dsc"


def regime_label(p: SystemParams) -> Regime:
    """Coupling regime from ``g / omega_c``: [0, 0.1) weak, [0.1, 1] USC, above 1 DSC."""
    ratio = p.g / p.omega_c
    if ratio < 0.1:
        return Regime.WEAK
    if ratio <= 1.0:
        return Regime.USC
    return Regime.DSC


def virtual_photons_ground(p: SystemParams) -> float:
    """Photon number ``<G| a_L^+ a_L |G>`` of the interacting ground state."""
    f = bogoliubov_coefficients(p)
    return f.f2 ** 2 + f.f4 ** 2


def virtual_matter_ground(p: SystemParams) -> float:
    """Matter-mode counterpart ``<G| a_R^+ a_R |G>``; equals the photon number under TRK."""
    f = bogoliubov_coefficients(p)
    return f.f6 ** 2 + f.f8 ** 2


def virtual_photons_thermal(p: SystemParams) -> float:
    """Steady-state photon number including thermal polariton populations.

    Raises DegenerateError when a polariton is decoupled from both baths.
    """
    f = bogoliubov_coefficients(p)
    n_upper, n_lower = steady_populations(p)
    return n_upper * (f.f1 ** 2 + f.f2 ** 2) + n_lower * (f.f3 ** 2 + f.f4 ** 2) + f.f2 ** 2 + f.f4 ** 2


def _resonant_ratio(p: SystemParams) -> float:
    if not p.is_resonant:
        raise DomainError("virtual-photon asymptotes are defined at resonance (omega_c == omega_b)")
    return p.g / p.omega_c


def asymptote_weak(p: SystemParams) -> float:
    x = _resonant_ratio(p)
    return 0.25 * x * x


def asymptote_intermediate(p: SystemParams) -> float:
    x = _resonant_ratio(p)
    return x / 6.0 + x * x / 11.0 - 1.0 / 20.0


def asymptote_dsc(p: SystemParams) -> float:
    x = _resonant_ratio(p)
    return 0.5 * x - 0.5


@dataclass(frozen=True)
class VirtualPhotonReport:
    exact: float
    thermal: float | None
    weak_approx: float | None
    intermediate_approx: float | None
    dsc_approx: float | None
    regime_label: Regime


def virtual_photon_report(p: SystemParams) -> VirtualPhotonReport:
    """Collects every virtual-photon quantity; ``None`` where one is undefined."""
    try:
        thermal = virtual_photons_thermal(p)
    except DegenerateError:
        thermal = None
    if p.is_resonant:
        approx = (asymptote_weak(p), asymptote_intermediate(p), asymptote_dsc(p))
    else:
        approx = (None, None, None)
    return VirtualPhotonReport(virtual_photons_ground(p), thermal, *approx, regime_label(p))
