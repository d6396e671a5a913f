"""Sweep configuration: flat ``key = value`` files, presets and overrides."""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

from .errors import ConfigError, DomainError
from .params import SpectralDensity, SystemParams

OUTPUT_COLUMNS = {
    "spectrum": ("omega_x", "omega_y", "theta"),
    "decay": ("Gamma_x", "Gamma_y", "weak_asymptote", "dsc_asymptote"),
    "heat": ("J_gme",),
    "lme": ("J_lme",),
    "entropy": ("Pi_ss",),
    "virtual": ("n_virtual_exact", "weak", "intermediate", "dsc"),
}
OUTPUT_ORDER = tuple(OUTPUT_COLUMNS)

SCENARIO_KEYS = ("omega_c", "omega_b", "g", "gamma_L", "gamma_R", "T_L", "T_R", "spectral_density")
SWEEP_KEYS = ("g_min", "g_max", "g_points", "g_scale", "outputs")
TRUNCATION_KEYS = ("ed_n_max", "liouvillian_n_max", "mode_n_max")


@dataclass(frozen=True)
class SweepConfig:
    scenario: SystemParams = SystemParams(1.0, 1.0, 0.1, 0.05, 0.05, 5.0, 0.5)
    g_min: float = 1e-3
    g_max: float = 1e2
    g_points: int = 200
    g_scale: str = "log"
    outputs: tuple[str, ...] = ("heat", "lme", "entropy")
    ed_n_max: int = 60
    liouvillian_n_max: int = 8
    mode_n_max: int = 40
    preset: str | None = None

    def __post_init__(self):
        if self.g_scale not in ("log", "linear"):
            raise ConfigError(f"g_scale must be 'log' or 'linear', got {self.g_scale!r}")
        if self.g_points < 2:
            raise ConfigError("g_points must be >= 2")
        if self.g_scale == "log" and self.g_min <= 0:
            raise ConfigError("g_min must be > 0 for a log sweep")
        if self.g_min < 0 or self.g_max < self.g_min:
            raise ConfigError("need 0 <= g_min <= g_max")
        for name in self.outputs:
            if name not in OUTPUT_COLUMNS:
                raise ConfigError(f"unknown output {name!r}; choose from {', '.join(OUTPUT_ORDER)}")

    def columns(self) -> list[str]:
        cols = ["g_over_wc"]
        for name in self.outputs:
            cols.extend(OUTPUT_COLUMNS[name])
        return cols

    def as_items(self) -> list[tuple[str, str]]:
        """Every setting as text, in a fixed order, for the CSV header echo."""
        items = [(k, _text(v)) for k, v in self.scenario.as_dict().items()]
        items += [
            ("g_min", _text(self.g_min)),
            ("g_max", _text(self.g_max)),
            ("g_points", str(self.g_points)),
            ("g_scale", self.g_scale),
            ("outputs", ",".join(self.outputs)),
            ("ed_n_max", str(self.ed_n_max)),
            ("liouvillian_n_max", str(self.liouvillian_n_max)),
            ("mode_n_max", str(self.mode_n_max)),
        ]
        return items


def _text(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _fig3(omega_b: float, name: str) -> SweepConfig:
    return SweepConfig(
        scenario=SystemParams(1.0, omega_b, 0.1, 0.05, 0.05, 5.0, 0.5),
        g_min=1e-3, g_max=1e2, g_points=200, outputs=("heat", "lme", "entropy"), preset=name,
    )


def _fig4(omega_b: float, name: str) -> SweepConfig:
    return SweepConfig(
        scenario=SystemParams(1.0, omega_b, 1.0, 0.05, 0.05, 0.0, 0.0),
        g_min=1e-2, g_max=1e1, g_points=200, outputs=("virtual",), preset=name,
    )


PRESETS = {
    "fig2": SweepConfig(
        # gamma_L is the rate unit, so Gamma / gamma_L is what gets plotted
        scenario=SystemParams(1.0, 0.97, 0.1, 1.0, 0.0, 0.0, 0.0),
        g_min=1e-3, g_max=1e2, g_points=200, outputs=("decay",), preset="fig2",
    ),
    "fig3-resonant": _fig3(1.0, "fig3-resonant"),
    "fig3-offres": _fig3(0.2, "fig3-offres"),
    "fig4-resonant": _fig4(1.0, "fig4-resonant"),
    "fig4-offres": _fig4(0.2, "fig4-offres"),
}

PRESET_DESCRIPTIONS = {
    "fig2": "polariton decay rates, omega_b = 0.97, right bath disconnected",
    "fig3-resonant": "GME and LME heat currents at resonance, gamma = 0.05, T_L = 5, T_R = 0.5",
    "fig3-offres": "GME and LME heat currents at omega_c = 5 omega_b",
    "fig4-resonant": "ground-state virtual photons at resonance with regime asymptotes",
    "fig4-offres": "ground-state virtual photons at omega_c = 5 omega_b",
}


def _coerce(key: str, raw: str, where: str):
    raw = raw.strip()
    try:
        if key in ("g_points", "ed_n_max", "liouvillian_n_max", "mode_n_max"):
            value = int(raw)
        elif key in ("g_scale",):
            value = raw.lower()
        elif key == "spectral_density":
            value = SpectralDensity.parse(raw)
        elif key == "outputs":
            value = tuple(s.strip().lower() for s in raw.split(",") if s.strip())
        else:
            value = float(raw)
            if not math.isfinite(value):
                raise ValueError("not finite")
    except (ValueError, DomainError) as exc:
        raise ConfigError(f"{where}: bad value {raw!r} for key {key!r} ({exc})") from None
    return value


def parse_assignment(text: str, where: str) -> tuple[str, str]:
    if "=" not in text:
        raise ConfigError(f"{where}: expected 'key = value', got {text.strip()!r}")
    key, raw = text.split("=", 1)
    key = key.strip()
    if key not in SCENARIO_KEYS + SWEEP_KEYS + TRUNCATION_KEYS:
        raise ConfigError(f"{where}: unknown key {key!r}")
    return key, raw


def parse_config_text(text: str, source: str = "<config>") -> list[tuple[str, object]]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        where = f"{source}:{lineno}"
        key, raw = parse_assignment(body, where)
        out.append((key, _coerce(key, raw, where)))
    return out


def apply_settings(cfg: SweepConfig, settings) -> SweepConfig:
    scenario_changes = {}
    sweep_changes = {}
    for key, value in settings:
        if key in SCENARIO_KEYS:
            scenario_changes[key] = value
        else:
            sweep_changes[key] = value
    try:
        scenario = cfg.scenario.replace(**scenario_changes) if scenario_changes else cfg.scenario
        return dataclasses.replace(cfg, scenario=scenario, **sweep_changes)
    except DomainError as exc:
        raise ConfigError(str(exc)) from None


def build_config(preset: str | None = None, config_text: str | None = None, config_source: str = "<config>",
                 overrides: list[str] = ()) -> SweepConfig:
    """Preset, then config file, then ``--set`` overrides, later ones winning."""
    if preset is None:
        cfg = SweepConfig()
    elif preset in PRESETS:
        cfg = PRESETS[preset]
    else:
        raise ConfigError(f"unknown preset {preset!r}; choose from {', '.join(PRESETS)}")
    if config_text is not None:
        cfg = apply_settings(cfg, parse_config_text(config_text, config_source))
    settings = []
    for i, item in enumerate(overrides, start=1):
        where = f"--set #{i}"
        key, raw = parse_assignment(item, where)
        settings.append((key, _coerce(key, raw, where)))
    return apply_settings(cfg, settings)
