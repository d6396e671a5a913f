"""Analytic diagonalisation of the isotropic two-mode Hopfield Hamiltonian.

    H = w_c a_L^+ a_L + w_b a_R^+ a_R + i g (a_L a_R^+ - a_L^+ a_R)
        + i g (a_L^+ a_R^+ - a_L a_R) + D (a_L + a_L^+)^2,   D = g^2 / w_b

The Hamiltonian maps onto two independent polariton oscillators with
frequencies ``omega_x >= omega_y`` and ladder operators ``A_L`` (upper) and
``A_R`` (lower). Bare and dressed operators are related by

    a_L = f1 A_L + f2 A_L^+ - f3 A_R - f4 A_R^+
    a_R = i (f5 A_L + f6 A_L^+ + f7 A_R + f8 A_R^+)
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NumericalError
from .params import SystemParams


@dataclass(frozen=True)
class PolaritonSpectrum:
    omega_x: float
    omega_y: float
    theta: float = float("nan")


@dataclass(frozen=True)
class BogoliubovCoefficients:
    f1: float
    f2: float
    f3: float
    f4: float
    f5: float
    f6: float
    f7: float
    f8: float

    def as_tuple(self):
        return (self.f1, self.f2, self.f3, self.f4, self.f5, self.f6, self.f7, self.f8)

    # Combinations that set how strongly each polariton couples to each bath.
    @property
    def left_x(self) -> float:
        return (self.f1 + self.f2) ** 2

    @property
    def left_y(self) -> float:
        return (self.f3 + self.f4) ** 2

    @property
    def right_x(self) -> float:
        return (self.f5 - self.f6) ** 2

    @property
    def right_y(self) -> float:
        return (self.f7 - self.f8) ** 2


def diamagnetic_term(p: SystemParams) -> float:
    """TRK-locked diamagnetic coefficient ``g**2 / omega_b``."""
    return p.g * p.g / p.omega_b


def critical_coupling(p: SystemParams) -> float | None:
    """Coupling at which the mixing-angle denominator changes sign.

    Only exists for ``omega_c < omega_b``; returns None otherwise.
    """
    if p.omega_c >= p.omega_b:
        return None
    wc, wb = p.omega_c, p.omega_b
    return math.sqrt(wb * (wb * wb - wc * wc) / (4.0 * wc))


def polariton_frequencies(p: SystemParams) -> PolaritonSpectrum:
    """Upper and lower polariton frequencies (``theta`` left as NaN)."""
    wc, wb, g = p.omega_c, p.omega_b, p.g
    D = diamagnetic_term(p)
    total = wc * wc + wb * wb + 4.0 * D * wc
    detuning = wc * wc - wb * wb + 4.0 * D * wc
    radicand = detuning * detuning + 16.0 * g * g * wc * wb
    if radicand < 0:
        raise NumericalError(f"negative radicand {radicand} in polariton frequencies")
    root = math.sqrt(radicand)
    upper_sq = 0.5 * (total + root)
    # Lower root in conjugate form: (total^2 - root^2) / (2 (total + root)),
    # avoiding the cancellation of total - root at large g. With D = g^2/w_b
    # the numerator is exactly 4 w_c^2 w_b^2; the D w_b - g^2 term is dropped
    # because evaluating it only adds roundoff of order eps g^2.
    lower_sq = 2.0 * wc * wc * wb * wb / (total + root)
    if lower_sq <= 0:
        raise NumericalError(f"non-positive lower polariton frequency squared {lower_sq}")
    return PolaritonSpectrum(math.sqrt(upper_sq), math.sqrt(lower_sq))


def mixing_angle(p: SystemParams) -> float:
    """Rotation angle theta of the polariton transformation.

    Uses ``theta = atan2(4 g sqrt(w_b w_c), w_c^2 + 4 D w_c - w_b^2) / 2``.
    For ``w_c < w_b`` the denominator is negative below the critical coupling
    and the two-argument arctangent returns the shifted branch
    ``theta + pi/2`` there, so theta stays continuous in g. At ``g = 0`` the
    angle is 0 for ``w_c >= w_b`` and pi/2 for ``w_c < w_b`` (photon mode
    then becomes the lower polariton).
    """
    wc, wb, g = p.omega_c, p.omega_b, p.g
    D = diamagnetic_term(p)
    num = 4.0 * g * math.sqrt(wb * wc)
    den = wc * wc + 4.0 * D * wc - wb * wb
    if num == 0.0 and den == 0.0:
        return 0.0
    return 0.5 * math.atan2(num, den)


def spectrum(p: SystemParams) -> PolaritonSpectrum:
    freqs = polariton_frequencies(p)
    return PolaritonSpectrum(freqs.omega_x, freqs.omega_y, mixing_angle(p))


def bogoliubov_coefficients(p: SystemParams, spec: PolaritonSpectrum | None = None) -> BogoliubovCoefficients:
    if spec is None or math.isnan(spec.theta):
        spec = spectrum(p)
    wc, wb = p.omega_c, p.omega_b
    wx, wy = spec.omega_x, spec.omega_y
    c, s = math.cos(spec.theta), math.sin(spec.theta)
    cx = 2.0 * math.sqrt(wx * wc)
    cy = 2.0 * math.sqrt(wy * wc)
    bx = 2.0 * math.sqrt(wx * wb)
    by = 2.0 * math.sqrt(wy * wb)
    return BogoliubovCoefficients(
        f1=(wc + wx) / cx * c,
        f2=(wc - wx) / cx * c,
        f3=(wc + wy) / cy * s,
        f4=(wc - wy) / cy * s,
        f5=(wb + wx) / bx * s,
        f6=(wb - wx) / bx * s,
        f7=(wb + wy) / by * c,
        f8=(wb - wy) / by * c,
    )


def eigenenergy(spec: PolaritonSpectrum, m: int, n: int) -> float:
    """Energy of the state with ``m`` upper and ``n`` lower polaritons."""
    if m < 0 or n < 0:
        raise ValueError("occupation numbers must be non-negative")
    return spec.omega_x * (m + 0.5) + spec.omega_y * (n + 0.5)


def low_lying_levels(spec: PolaritonSpectrum, count: int) -> list[float]:
    """The ``count`` smallest eigenenergies, sorted ascending."""
    # Both quanta are positive, so the lowest ``count`` levels have m, n < count.
    levels = sorted(eigenenergy(spec, m, n) for m in range(count) for n in range(count))
    return levels[:count]
