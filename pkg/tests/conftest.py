import numpy as np
import pytest
from hypothesis import strategies as st

from hopfield_transport import SystemParams

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)


@pytest.fixture
def record():
    def _record(label, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok
    return _record


def log_uniform(lo, hi):
    return st.floats(np.log(lo), np.log(hi)).map(np.exp)


@st.composite
def system_params(draw, g_range=(1e-3, 50.0), resonant=None):
    omega_b = 1.0 if resonant else draw(log_uniform(0.1, 10.0))
    return SystemParams(
        omega_c=1.0,
        omega_b=omega_b,
        g=draw(log_uniform(*g_range)),
        gamma_L=draw(log_uniform(1e-3, 0.1)),
        gamma_R=draw(log_uniform(1e-3, 0.1)),
        T_L=draw(st.floats(0.05, 10.0)),
        T_R=draw(st.floats(0.05, 10.0)),
    )


def random_params(rng, n, g_range=(1e-3, 50.0)):
    """Reproducible parameter draws matching the acceptance ranges."""
    out = []
    for _ in range(n):
        out.append(SystemParams(
            omega_c=1.0,
            omega_b=float(np.exp(rng.uniform(np.log(0.1), np.log(10.0)))),
            g=float(np.exp(rng.uniform(np.log(g_range[0]), np.log(g_range[1])))),
            gamma_L=float(np.exp(rng.uniform(np.log(1e-3), np.log(0.1)))),
            gamma_R=float(np.exp(rng.uniform(np.log(1e-3), np.log(0.1)))),
            T_L=float(rng.uniform(0.05, 10.0)),
            T_R=float(rng.uniform(0.05, 10.0)),
        ))
    return out
