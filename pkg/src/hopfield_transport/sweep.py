"""Coupling sweeps emitted as CSV, and the single-point text report."""
from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .config import SweepConfig
from .dissipation import decay_rates, gme_rates, purcell_dsc_asymptote, purcell_weak_asymptote, steady_populations
from .errors import DegenerateError, DomainError
from .hopfield import bogoliubov_coefficients, diamagnetic_term, spectrum
from .params import SystemParams
from .transport import heat_current_gme, heat_current_lme, second_law_audit, transmission_lines
from .virtual import virtual_photon_report

UNITS_LINE = "units: hbar = k_B = 1; frequencies, couplings and temperatures in units of omega_c"
NAN = float("nan")


def g_grid(cfg: SweepConfig) -> np.ndarray:
    wc = cfg.scenario.omega_c
    if cfg.g_scale == "log":
        return np.geomspace(cfg.g_min, cfg.g_max, cfg.g_points) * wc
    return np.linspace(cfg.g_min, cfg.g_max, cfg.g_points) * wc


def _or_nan(fn, p):
    try:
        return fn(p)
    except DomainError:
        return NAN


def row_values(p: SystemParams, outputs) -> list[float]:
    row = [p.g / p.omega_c]
    for name in outputs:
        if name == "spectrum":
            s = spectrum(p)
            row += [s.omega_x, s.omega_y, s.theta]
        elif name == "decay":
            d = decay_rates(p)
            row += [d.gamma_x, d.gamma_y, _or_nan(purcell_weak_asymptote, p), _or_nan(purcell_dsc_asymptote, p)]
        elif name == "heat":
            row.append(heat_current_gme(p, include_lme=False).j_left)
        elif name == "lme":
            row.append(heat_current_lme(p).current)
        elif name == "entropy":
            pi = heat_current_gme(p, include_lme=False).entropy_production
            row.append(NAN if pi is None else pi)
        elif name == "virtual":
            v = virtual_photon_report(p)
            row += [v.exact] + [NAN if x is None else x for x in (v.weak_approx, v.intermediate_approx, v.dsc_approx)]
    return row


def format_number(x: float) -> str:
    return format(float(x), ".17g")


def run_sweep(cfg: SweepConfig, threads: int = 1, provenance: bool = True) -> str:
    """CSV document with a ``#`` comment header echoing the configuration."""
    params = [cfg.scenario.replace(g=float(g)) for g in g_grid(cfg)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda q: row_values(q, cfg.outputs), params))
    else:
        rows = [row_values(q, cfg.outputs) for q in params]

    buf = io.StringIO()
    buf.write("# hopfield-transport sweep\n")
    buf.write(f"# {UNITS_LINE}\n")
    if provenance:
        buf.write(f"# generated_by: hopfield-transport {__version__}\n")
    if cfg.preset:
        buf.write(f"# preset: {cfg.preset}\n")
    for key, value in cfg.as_items():
        if key == "g":
            continue  # swept
        buf.write(f"# {key} = {value}\n")
    buf.write(",".join(cfg.columns()) + "\n")
    for row in rows:
        buf.write(",".join(format_number(x) for x in row) + "\n")
    return buf.getvalue()


def point_report(p: SystemParams) -> str:
    """Every quantity at a single coupling as ``key: value`` lines."""
    lines = [f"# {UNITS_LINE}"]

    def put(key, value):
        if isinstance(value, bool) or value is None:
            text = str(value).lower()
        elif isinstance(value, float):
            text = format_number(value)
        else:
            text = str(value)
        lines.append(f"{key}: {text}")

    for key, value in p.as_dict().items():
        put(key, value)
    put("diamagnetic_D", diamagnetic_term(p))
    s = spectrum(p)
    put("omega_x", s.omega_x)
    put("omega_y", s.omega_y)
    put("theta", s.theta)
    for i, f in enumerate(bogoliubov_coefficients(p, s).as_tuple(), start=1):
        put(f"f{i}", f)
    r = gme_rates(p)
    for key in ("alpha1", "alpha2", "beta1", "beta2"):
        put(key, getattr(r, key))
    d = decay_rates(p)
    put("Gamma_x", d.gamma_x)
    put("Gamma_y", d.gamma_y)
    try:
        nx, ny = steady_populations(p)
        put("n_upper_ss", nx)
        put("n_lower_ss", ny)
    except DegenerateError:
        put("n_upper_ss", "degenerate")
        put("n_lower_ss", "degenerate")
    t = heat_current_gme(p)
    put("J_gme_left", t.j_left)
    put("J_gme_right", t.j_right)
    put("J_gme_upper", t.per_polariton[0])
    put("J_gme_lower", t.per_polariton[1])
    put("Pi_ss", "not-applicable" if t.entropy_production is None else t.entropy_production)
    put("gme_validity_warning", t.gme_validity_warning)
    put("J_lme", t.lme.current)
    put("lme_validity_warning", t.lme.validity_warning)
    for name, line in zip(("upper", "lower"), transmission_lines(p)):
        put(f"transmission_{name}_weight", line.weight)
    if p.T_L > 0 and p.T_R > 0:
        a = second_law_audit(p)
        put("lme_violation_predicate", a.lme_violation_predicate)
        put("lme_cold_to_hot", a.lme_cold_to_hot)
    v = virtual_photon_report(p)
    put("n_virtual_exact", v.exact)
    put("n_virtual_thermal", "degenerate" if v.thermal is None else v.thermal)
    put("regime", v.regime_label.value)
    if v.weak_approx is not None:
        put("virtual_weak", v.weak_approx)
        put("virtual_intermediate", v.intermediate_approx)
        put("virtual_dsc", v.dsc_approx)
    return "\n".join(lines) + "\n"


def is_finite_row(row) -> bool:
    return all(math.isfinite(x) for x in row)
