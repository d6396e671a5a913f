"""Rate structure of the global Lindblad master equation.

Each polariton ``j`` in {x, y} couples to bath ``lam`` in {L, R} with strength
``kappa = gamma_lam(omega_j) * c_lam_j`` where the mode weights are
``(f1+f2)^2, (f3+f4)^2`` for the left bath and ``(f5-f6)^2, (f7-f8)^2`` for
the right bath. In terms of these,

    alpha_1 = sum_lam kappa_lam_x (n_lam(omega_x) + 1)   (emission, upper)
    alpha_2 = sum_lam kappa_lam_x n_lam(omega_x)         (absorption, upper)

and ``beta_1, beta_2`` likewise for the lower polariton.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DomainError
from .hopfield import BogoliubovCoefficients, PolaritonSpectrum, bogoliubov_coefficients, spectrum
from .params import SystemParams

# exp(700) is close to the largest finite double.
_OVERFLOW_RATIO = 700.0


def bose_einstein(omega, T):
    """Bose-Einstein occupation ``1 / (exp(omega/T) - 1)``.

    Accepts scalars or arrays. Returns exactly 0 at ``T = 0`` and when
    ``omega / T > 700``.
    """
    omega_arr = np.asarray(omega, dtype=float)
    T_arr = np.asarray(T, dtype=float)
    if np.any(omega_arr <= 0):
        raise DomainError("Bose-Einstein occupation needs omega > 0")
    if np.any(T_arr < 0):
        raise DomainError("temperature must be >= 0")
    if omega_arr.ndim == 0 and T_arr.ndim == 0:
        w, t = float(omega_arr), float(T_arr)
        if t == 0.0 or w / t > _OVERFLOW_RATIO:
            return 0.0
        return 1.0 / math.expm1(w / t)
    omega_arr, T_arr = np.broadcast_arrays(omega_arr, T_arr)
    out = np.zeros(omega_arr.shape)
    with np.errstate(divide="ignore"):
        ratio = np.where(T_arr > 0, omega_arr / np.where(T_arr > 0, T_arr, 1.0), np.inf)
    live = ratio <= _OVERFLOW_RATIO
    out[live] = 1.0 / np.expm1(ratio[live])
    return out


@dataclass(frozen=True)
class RateSet:
    alpha1: float
    alpha2: float
    beta1: float
    beta2: float


@dataclass(frozen=True)
class DecayRates:
    gamma_x: float
    gamma_y: float


@dataclass(frozen=True)
class BathChannels:
    """Per-bath coupling of each polariton, before thermal weighting."""

    kappa_Lx: float
    kappa_Ly: float
    kappa_Rx: float
    kappa_Ry: float


def bath_channels(p: SystemParams, spec: PolaritonSpectrum | None = None,
                  coeffs: BogoliubovCoefficients | None = None) -> BathChannels:
    spec = spec or spectrum(p)
    coeffs = coeffs or bogoliubov_coefficients(p, spec)
    left, right = p.left_bath, p.right_bath
    wx, wy = spec.omega_x, spec.omega_y
    return BathChannels(
        kappa_Lx=left.coupling(wx, p.omega_c) * coeffs.left_x,
        kappa_Ly=left.coupling(wy, p.omega_c) * coeffs.left_y,
        kappa_Rx=right.coupling(wx, p.omega_c) * coeffs.right_x,
        kappa_Ry=right.coupling(wy, p.omega_c) * coeffs.right_y,
    )


def gme_rates(p: SystemParams) -> RateSet:
    spec = spectrum(p)
    ch = bath_channels(p, spec)
    nLx, nRx = bose_einstein(spec.omega_x, p.T_L), bose_einstein(spec.omega_x, p.T_R)
    nLy, nRy = bose_einstein(spec.omega_y, p.T_L), bose_einstein(spec.omega_y, p.T_R)
    return RateSet(
        alpha1=ch.kappa_Lx * (nLx + 1.0) + ch.kappa_Rx * (nRx + 1.0),
        alpha2=ch.kappa_Lx * nLx + ch.kappa_Rx * nRx,
        beta1=ch.kappa_Ly * (nLy + 1.0) + ch.kappa_Ry * (nRy + 1.0),
        beta2=ch.kappa_Ly * nLy + ch.kappa_Ry * nRy,
    )


def decay_rates(p: SystemParams) -> DecayRates:
    """Temperature-independent polariton decay rates.

    Evaluated from the bath channels directly rather than as
    ``alpha1 - alpha2``, which loses precision at high temperature.
    """
    ch = bath_channels(p)
    return DecayRates(ch.kappa_Lx + ch.kappa_Rx, ch.kappa_Ly + ch.kappa_Ry)


def purcell_weak_asymptote(p: SystemParams) -> float:
    """Weak-coupling growth of the lower-polariton rate, ``4 g^2 w_c^2 gamma_L / (w_c^2 - w_b^2)^2``."""
    split = p.omega_c ** 2 - p.omega_b ** 2
    if split == 0.0:
        raise DomainError("weak-coupling Purcell asymptote diverges at resonance")
    return 4.0 * p.g ** 2 * p.omega_c ** 2 * p.gamma_L / split ** 2


def purcell_dsc_asymptote(p: SystemParams) -> float:
    """Deep-strong-coupling decay, ``w_b^2 gamma_L sqrt(w_c w_b) / (g (w_c^2 + w_b^2))``."""
    if p.g == 0.0:
        raise DomainError("deep-strong-coupling asymptote is undefined at g = 0")
    wc, wb = p.omega_c, p.omega_b
    return wb ** 2 * p.gamma_L * math.sqrt(wc * wb) / (p.g * (wc ** 2 + wb ** 2))


def _relaxing_population(gain: float, rate: float, t: float) -> float:
    if rate == 0.0:
        if math.isinf(t):
            raise DegenerateError("polariton mode is decoupled from both baths; no steady state")
        return 2.0 * gain * t
    if math.isinf(t):
        return gain / rate
    return gain / rate * -math.expm1(-2.0 * rate * t)


def polariton_populations(p: SystemParams, t: float, rates: RateSet | None = None) -> tuple[float, float]:
    """Mean upper and lower polariton numbers at time ``t`` from vacuum.

    ``t = math.inf`` gives the steady state. Pass ``rates`` to evaluate the
    closed form with an externally supplied rate set.
    """
    if not t >= 0:
        raise DomainError(f"time must be >= 0, got {t}")
    r = rates or gme_rates(p)
    return (
        _relaxing_population(r.alpha2, r.alpha1 - r.alpha2, t),
        _relaxing_population(r.beta2, r.beta1 - r.beta2, t),
    )


def steady_populations(p: SystemParams, rates: RateSet | None = None) -> tuple[float, float]:
    return polariton_populations(p, math.inf, rates)


def gme_validity_warning(p: SystemParams) -> bool:
    """True when neither ``g >> gamma`` nor ``|w_c - w_b| >> gamma`` holds (threshold factor 1)."""
    gamma = max(p.gamma_L, p.gamma_R)
    return p.g < gamma and abs(p.omega_c - p.omega_b) < gamma


def lme_validity_warning(p: SystemParams) -> bool:
    """True when the coupling exceeds the bath couplings, outside the local-equation regime."""
    return p.g > min(p.gamma_L, p.gamma_R)
