"""Scenario parameters for the two-mode junction.

Units throughout: hbar = k_B = 1, energies measured in units of the photon
frequency ``omega_c`` (default 1.0).
"""
from __future__ import annotations

import dataclasses
import enum
import math
from dataclasses import dataclass

from .errors import DomainError


class SpectralDensity(str, enum.Enum):
    FLAT = "flat"
    OHMIC = "ohmic"

    @classmethod
    def parse(cls, value) -> "SpectralDensity":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise DomainError(f"unknown spectral density {value!r}; expected 'flat' or 'ohmic'") from None


@dataclass(frozen=True)
class BathSpec:
    temperature: float
    gamma: float
    spectral_density: SpectralDensity = SpectralDensity.FLAT

    def __post_init__(self):
        if not (self.temperature >= 0 and math.isfinite(self.temperature)):
            raise DomainError(f"bath temperature must be finite and >= 0, got {self.temperature}")
        if not (self.gamma >= 0 and math.isfinite(self.gamma)):
            raise DomainError(f"bath coupling must be finite and >= 0, got {self.gamma}")

    def coupling(self, omega, omega_ref):
        """Bath coupling strength evaluated at frequency ``omega``.

        Flat: ``gamma``; Ohmic: ``gamma * omega / omega_ref``.
        """
        if self.spectral_density is SpectralDensity.OHMIC:
            return self.gamma * omega / omega_ref
        return self.gamma


@dataclass(frozen=True)
class SystemParams:
    """Single source of truth for one scenario.

    The diamagnetic coefficient is not a field: it is always locked to the
    Thomas-Reiche-Kuhn value ``g**2 / omega_b``.
    """

    omega_c: float = 1.0
    omega_b: float = 1.0
    g: float = 0.0
    gamma_L: float = 0.0
    gamma_R: float = 0.0
    T_L: float = 0.0
    T_R: float = 0.0
    spectral_density: SpectralDensity = SpectralDensity.FLAT

    def __post_init__(self):
        object.__setattr__(self, "spectral_density", SpectralDensity.parse(self.spectral_density))
        for name in ("omega_c", "omega_b", "g", "gamma_L", "gamma_R", "T_L", "T_R"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise DomainError(f"{name} must be a real number, got {value!r}") from None
            if not math.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value}")
            object.__setattr__(self, name, value)
        if self.omega_c <= 0 or self.omega_b <= 0:
            raise DomainError("bare frequencies omega_c and omega_b must be > 0")
        for name in ("g", "gamma_L", "gamma_R", "T_L", "T_R"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got {getattr(self, name)}")

    @property
    def left_bath(self) -> BathSpec:
        return BathSpec(self.T_L, self.gamma_L, self.spectral_density)

    @property
    def right_bath(self) -> BathSpec:
        return BathSpec(self.T_R, self.gamma_R, self.spectral_density)

    @property
    def is_resonant(self) -> bool:
        return math.isclose(self.omega_c, self.omega_b, rel_tol=1e-12, abs_tol=0.0)

    def replace(self, **changes) -> "SystemParams":
        return dataclasses.replace(self, **changes)

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["spectral_density"] = self.spectral_density.value
        return d
