"""Brute-force numerical oracles for the analytic results.

Three independent routes:

* exact diagonalisation of the Hopfield Hamiltonian in a truncated bare
  Fock basis (checks the polariton spectrum and Bogoliubov coefficients);
* null-space solves of the vectorised Lindblad generator in a truncated
  polariton Fock basis (checks the rate structure and steady state);
* implicit Runge-Kutta (Radau) integration of the polariton number equations.

Basis ordering for two-mode operators is mode-major, number ascending:
index ``m * (n_max + 1) + n`` for ``|m>_L |n>_R``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from scipy.integrate import solve_ivp

from .dissipation import RateSet, bose_einstein, polariton_populations
from .errors import ConvergenceError, DomainError, HopfieldError, ResourceError, StepSizeError
from .hopfield import bogoliubov_coefficients, diamagnetic_term, eigenenergy, low_lying_levels, spectrum
from .params import SystemParams
from .transport import heat_current_gme, left_current_from_populations

BASIS_ORDER = "mode-major, number ascending"


@dataclass(frozen=True)
class FockTruncation:
    n_max: int = 60
    convergence_tol: float = 1e-6
    step: int = 10
    max_n_max: int = 249

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 2:
            raise DomainError(f"n_max must be an integer >= 2, got {self.n_max}")
        if not self.convergence_tol > 0:
            raise DomainError("convergence_tol must be > 0")
        if self.step < 1:
            raise DomainError("cutoff step must be >= 1")

    def with_n_max(self, n_max: int) -> "FockTruncation":
        return FockTruncation(n_max, self.convergence_tol, self.step, self.max_n_max)

    def check_cap(self, n_max: int | None = None):
        n = self.n_max if n_max is None else n_max
        if n > self.max_n_max:
            raise ResourceError(f"n_max={n} exceeds configured cap {self.max_n_max}")


# Defaults: bare-basis ED, full two-mode Liouvillian, single polariton mode.
ED_TRUNCATION = FockTruncation(60, 1e-6)
LIOUVILLIAN_TRUNCATION = FockTruncation(8, 1e-8, max_n_max=12)
MODE_TRUNCATION = FockTruncation(40, 1e-12, max_n_max=4000)


@dataclass
class OperatorMatrix:
    matrix: sp.spmatrix
    n_max: int
    kind: str
    basis: str = BASIS_ORDER

    @property
    def shape(self):
        return self.matrix.shape


def annihilation(n_max: int) -> sp.csr_matrix:
    return sp.diags(np.sqrt(np.arange(1, n_max + 1, dtype=float)), 1, format="csr")


def two_mode_ladders(n_max: int) -> tuple[sp.csr_matrix, sp.csr_matrix]:
    a = annihilation(n_max)
    eye = sp.identity(n_max + 1, format="csr")
    return sp.kron(a, eye, format="csr"), sp.kron(eye, a, format="csr")


# --------------------------------------------------------------------------
# exact diagonalisation in the bare basis

def build_hamiltonian(p: SystemParams, trunc: FockTruncation = ED_TRUNCATION) -> OperatorMatrix:
    trunc.check_cap()
    aL, aR = two_mode_ladders(trunc.n_max)
    aLd, aRd = aL.T.tocsr(), aR.T.tocsr()
    D = diamagnetic_term(p)
    xL = aL + aLd
    H = (
        p.omega_c * (aLd @ aL)
        + p.omega_b * (aRd @ aR)
        + 1j * p.g * (aL @ aRd - aLd @ aR)
        + 1j * p.g * (aLd @ aRd - aL @ aR)
        + D * (xL @ xL)
    )
    return OperatorMatrix(H.tocsr(), trunc.n_max, "hamiltonian")


def _lowest_eigenpairs(H: sp.spmatrix, k: int):
    dim = H.shape[0]
    if dim <= 600:
        vals, vecs = np.linalg.eigh(H.toarray())
        return vals[:k], vecs[:, :k]
    # plain Lanczos on "SA" can skip an isolated ground state (it does for a diagonal H)
    # and crawls when the spectrum is wide.  Shift-invert from below the Gershgorin bound
    # is guaranteed to land on the ground state; a second pass just under it then
    # returns the k lowest levels
    v0 = np.random.default_rng(0).standard_normal(dim).astype(H.dtype)
    diag = H.diagonal().real
    radius = np.asarray(abs(H).sum(axis=1)).ravel() - np.abs(diag)
    floor = float(np.min(diag - radius))
    floor -= 0.5 + 1e-3 * abs(floor)
    e0 = spla.eigsh(H, k=1, sigma=floor, which="LM", v0=v0, tol=1e-10, return_eigenvectors=False)[0]
    sigma = float(e0) - 0.1 * (1.0 + abs(float(e0)))
    vals, vecs = spla.eigsh(H, k=k, sigma=sigma, which="LM", v0=v0, tol=1e-14)
    if np.min(vals) <= sigma:
        raise ConvergenceError("shift-invert returned a level below its shift")
    order = np.argsort(vals)
    return vals[order], vecs[:, order]


def ed_levels(p: SystemParams, trunc: FockTruncation = ED_TRUNCATION, count: int = 10) -> np.ndarray:
    """Lowest ``count`` excitation energies ``E_k - E_0`` from the truncated Hamiltonian."""
    H = build_hamiltonian(p, trunc).matrix
    vals, _ = _lowest_eigenpairs(H, count)
    return vals - vals[0]


def _converged(a: float, b: float, tol: float, floor: float = 1e-14) -> bool:
    return abs(a - b) <= tol * max(abs(a), abs(b)) + floor


def ed_levels_converged(p: SystemParams, trunc: FockTruncation = ED_TRUNCATION, count: int = 10,
                        tol: float = 1e-8) -> np.ndarray:
    """Excitation energies, checked for stability under ``n_max -> n_max + step``."""
    trunc.check_cap(trunc.n_max + trunc.step)
    lo = ed_levels(p, trunc, count)
    hi = ed_levels(p, trunc.with_n_max(trunc.n_max + trunc.step), count)
    scale = max(p.omega_c, float(np.max(np.abs(hi))))
    if np.max(np.abs(lo - hi)) > tol * scale:
        raise ConvergenceError(
            f"ED levels changed by {np.max(np.abs(lo - hi)):.3e} between n_max={trunc.n_max} and "
            f"{trunc.n_max + trunc.step}; increase n_max"
        )
    return hi


def _ground_photons(p: SystemParams, trunc: FockTruncation) -> float:
    H = build_hamiltonian(p, trunc).matrix
    _, vecs = _lowest_eigenpairs(H, 1)
    v = vecs[:, 0]
    aL, _ = two_mode_ladders(trunc.n_max)
    w = aL @ v
    return float(np.real(np.vdot(w, w)))


def ed_ground_state_photons(p: SystemParams, trunc: FockTruncation = ED_TRUNCATION) -> float:
    """Photon number of the truncated-basis ground state.

    Raises ConvergenceError unless the value is stable to
    ``trunc.convergence_tol`` (relative) when the cutoff grows by ``trunc.step``.
    """
    trunc.check_cap(trunc.n_max + trunc.step)
    lo = _ground_photons(p, trunc)
    hi = _ground_photons(p, trunc.with_n_max(trunc.n_max + trunc.step))
    if not _converged(lo, hi, trunc.convergence_tol):
        raise ConvergenceError(
            f"ground-state photon number {lo:.10g} (n_max={trunc.n_max}) vs {hi:.10g} "
            f"(n_max={trunc.n_max + trunc.step}) not converged to {trunc.convergence_tol:g}; "
            "increase n_max (deep-strong coupling needs a large cutoff)"
        )
    return hi


def ground_photon_tolerance(p: SystemParams) -> float:
    return 1e-6 if p.g / p.omega_c <= 1.0 else 1e-3


# --------------------------------------------------------------------------
# Lindblad generator in the polariton basis

def _spre(A):
    return sp.kron(sp.identity(A.shape[0], format="csr"), A, format="csr")


def _spost(A):
    return sp.kron(A.T, sp.identity(A.shape[0], format="csr"), format="csr")


def dissipator(O: sp.spmatrix, rate: float) -> sp.csr_matrix:
    """Superoperator of ``rate * (2 O rho O^+ - O^+ O rho - rho O^+ O)``, column-stacked."""
    Od = O.conj().T.tocsr()
    OdO = (Od @ O).tocsr()
    return rate * (2.0 * sp.kron(O.conj(), O, format="csr") - _spre(OdO) - _spost(OdO))


def commutator(H: sp.spmatrix) -> sp.csr_matrix:
    """Superoperator of ``-i [H, rho]``."""
    return -1j * (_spre(H) - _spost(H))


@dataclass(frozen=True)
class Channel:
    """One polariton mode's coupling to one bath."""

    kappa: float
    occupation: float


def oracle_channels(p: SystemParams) -> dict[str, dict[str, Channel]]:
    """Bath couplings per polariton, assembled bath by bath.

    Keys: ``{"L": {"x": Channel, "y": Channel}, "R": {...}}``.
    """
    spec = spectrum(p)
    f = bogoliubov_coefficients(p, spec)
    weights = {
        "L": {"x": (f.f1 + f.f2) ** 2, "y": (f.f3 + f.f4) ** 2},
        "R": {"x": (f.f5 - f.f6) ** 2, "y": (f.f7 - f.f8) ** 2},
    }
    baths = {"L": p.left_bath, "R": p.right_bath}
    freqs = {"x": spec.omega_x, "y": spec.omega_y}
    out = {}
    for lam, bath in baths.items():
        out[lam] = {}
        for j, omega in freqs.items():
            out[lam][j] = Channel(
                kappa=bath.coupling(omega, p.omega_c) * weights[lam][j],
                occupation=bose_einstein(omega, bath.temperature),
            )
    return out


def _bath_dissipator(A, ch: Channel):
    Ad = A.T.tocsr()
    return dissipator(A, ch.kappa * (ch.occupation + 1.0)) + dissipator(Ad, ch.kappa * ch.occupation)


def build_liouvillian(p: SystemParams, trunc: FockTruncation = LIOUVILLIAN_TRUNCATION) -> OperatorMatrix:
    """Column-stacked generator on the truncated two-polariton space."""
    trunc.check_cap()
    spec = spectrum(p)
    A_L, A_R = two_mode_ladders(trunc.n_max)
    H = spec.omega_x * (A_L.T @ A_L) + spec.omega_y * (A_R.T @ A_R)
    ch = oracle_channels(p)
    L = commutator(H)
    for lam in ("L", "R"):
        L = L + _bath_dissipator(A_L, ch[lam]["x"]) + _bath_dissipator(A_R, ch[lam]["y"])
    return OperatorMatrix(L.tocsc(), trunc.n_max, "superoperator")


def build_mode_liouvillian(omega: float, channels: list[Channel], n_max: int) -> sp.csc_matrix:
    """Generator of a single polariton mode coupled to the given bath channels."""
    a = annihilation(n_max)
    L = commutator(omega * (a.T @ a))
    for ch in channels:
        L = L + _bath_dissipator(a, ch)
    return L.tocsc()


def steady_state(L: sp.spmatrix) -> np.ndarray:
    """Unit-trace null vector of a column-stacked generator, as a density matrix."""
    dim2 = L.shape[0]
    d = int(round(math.sqrt(dim2)))
    trace_row = np.zeros(dim2, dtype=complex)
    trace_row[:: d + 1] = 1.0
    M = sp.lil_matrix(L, dtype=complex)
    M[0, :] = trace_row
    rhs = np.zeros(dim2, dtype=complex)
    rhs[0] = 1.0
    x = spla.spsolve(M.tocsc(), rhs)
    rho = x.reshape((d, d), order="F")
    return 0.5 * (rho + rho.conj().T)


def population_generator(channels: list[Channel], n_max: int) -> sp.csc_matrix:
    """Restriction of a single-mode generator to diagonal density matrices.

    For any jump operator ``O`` the diagonal of ``2 O rho O^+ - {O^+ O, rho}``
    at ``rho = diag(p)`` is ``2 (|O|**2 - diag(O^+ O)) p``, and the commutator
    with a number-diagonal Hamiltonian vanishes there. Ladder-operator jumps
    never feed coherences into populations, so the steady state lives in
    this block and a cutoff of thousands of levels stays cheap.
    """
    a = annihilation(n_max)
    M = sp.csr_matrix((n_max + 1, n_max + 1))
    for ch in channels:
        for O, rate in ((a, ch.kappa * (ch.occupation + 1.0)), (a.T.tocsr(), ch.kappa * ch.occupation)):
            gain = O.multiply(O.conj()).real
            loss = sp.diags((O.conj().T @ O).diagonal().real)
            M = M + 2.0 * rate * (gain - loss)
    return M.tocsc()


def population_steady_state(M: sp.spmatrix) -> np.ndarray:
    """Normalised null vector of a population generator."""
    A = sp.lil_matrix(M)
    A[0, :] = np.ones(M.shape[0])
    rhs = np.zeros(M.shape[0])
    rhs[0] = 1.0
    return spla.spsolve(A.tocsc(), rhs)


def _mode_population(omega, channels, n_max) -> float:
    # omega drops out of the population block; kept for a uniform signature
    pops = population_steady_state(population_generator(channels, n_max))
    return float(np.dot(np.arange(n_max + 1), pops))


def liouvillian_steady_populations(p: SystemParams, trunc: FockTruncation = MODE_TRUNCATION) -> tuple[float, float]:
    """Steady polariton numbers from null-space solves, one mode at a time.

    The generator is a Kronecker sum over the two polariton modes, so its
    unique steady state is a product state and each mode can be solved on
    its own, on the population block of :func:`population_generator`; the
    full two-mode generator is cross-checked against this in
    :func:`verify_all`. The cutoff grows in ``trunc.step`` increments until
    consecutive values agree to ``trunc.convergence_tol``.
    """
    spec = spectrum(p)
    ch = oracle_channels(p)
    out = []
    for j, omega in (("x", spec.omega_x), ("y", spec.omega_y)):
        channels = [ch["L"][j], ch["R"][j]]
        if all(c.kappa == 0.0 for c in channels):
            raise ConvergenceError(f"polariton {j} is decoupled from both baths; null space is degenerate")
        n = trunc.n_max
        prev = _mode_population(omega, channels, n)
        while True:
            n += trunc.step
            if n > trunc.max_n_max:
                raise ConvergenceError(
                    f"polariton {j} population not converged by n_max={n - trunc.step} "
                    f"(last value {prev:.10g}); thermal occupation too large for the cap"
                )
            cur = _mode_population(omega, channels, n)
            if abs(cur - prev) <= trunc.convergence_tol * max(1.0, abs(cur)):
                out.append(cur)
                break
            prev = cur
    return out[0], out[1]


def liouvillian_spectrum_near_zero(L: sp.spmatrix, k: int = 4) -> np.ndarray:
    """Eigenvalues of the generator closest to zero, sorted by modulus."""
    dim = L.shape[0]
    if dim <= 2500:
        vals = np.linalg.eigvals(L.toarray())
    else:
        vals = spla.eigs(L, k=k, sigma=1e-3, which="LM", return_eigenvectors=False)
    return vals[np.argsort(np.abs(vals))][:k]


# --------------------------------------------------------------------------
# moment equations

def integrate_moments(p: SystemParams, t_grid, channels=None):
    """Integrate ``dN_j/dt = sum_lam 2 kappa_lam_j (n_lam_j - N_j)`` from vacuum.

    Returns an array of shape ``(len(t_grid), 2)`` with upper and lower
    polariton numbers.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size == 0 or t_grid[0] < 0 or np.any(np.diff(t_grid) <= 0):
        raise DomainError("t_grid must be a non-empty increasing array of non-negative times")
    ch = channels or oracle_channels(p)
    kap = np.array([[ch[lam][j].kappa for lam in ("L", "R")] for j in ("x", "y")])
    occ = np.array([[ch[lam][j].occupation for lam in ("L", "R")] for j in ("x", "y")])

    def rhs(_t, N):
        return 2.0 * np.sum(kap * (occ - N[:, None]), axis=1)

    jac = np.diag(-2.0 * np.sum(kap, axis=1))

    if t_grid[-1] == 0.0:
        return np.zeros((t_grid.size, 2))
    # an explicit scheme stepping at its stability limit near equilibrium drifts; Radau does not
    out = np.zeros((t_grid.size, 2))
    state = np.zeros(2)
    t_prev = 0.0
    for i, t in enumerate(t_grid):
        if t > t_prev:
            sol = solve_ivp(rhs, (t_prev, t), state, method="Radau", jac=jac, rtol=1e-10, atol=1e-12)
            if not sol.success:
                raise StepSizeError(f"moment integration failed: {sol.message}")
            state = sol.y[:, -1]
            t_prev = t
        out[i] = state
    return out


# --------------------------------------------------------------------------
# verification harness

@dataclass
class CheckResult:
    name: str
    passed: bool
    deviation: float = float("nan")
    tolerance: float = float("nan")
    detail: str = ""
    error: str | None = None
    error_type: str | None = None


@dataclass
class VerificationReport:
    params: SystemParams
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    @property
    def errored(self) -> list[CheckResult]:
        return [c for c in self.checks if c.error is not None]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_text(self) -> str:
        lines = []
        for key, value in self.params.as_dict().items():
            lines.append(f"param.{key}: {value}")
        for c in self.checks:
            status = "pass" if c.passed else ("error" if c.error else "FAIL")
            lines.append(f"{c.name}.status: {status}")
            lines.append(f"{c.name}.deviation: {c.deviation:.3e}")
            lines.append(f"{c.name}.tolerance: {c.tolerance:.3e}")
            if c.detail:
                lines.append(f"{c.name}.detail: {c.detail}")
            if c.error:
                lines.append(f"{c.name}.error: {c.error_type}: {c.error}")
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _run(report: VerificationReport, name: str, fn):
    try:
        deviation, tolerance, detail = fn()
        report.checks.append(CheckResult(name, bool(deviation <= tolerance), float(deviation), float(tolerance), detail))
    except HopfieldError as exc:
        report.checks.append(CheckResult(name, False, error=str(exc), error_type=type(exc).__name__))
    except (ArithmeticError, ValueError, np.linalg.LinAlgError, RuntimeError) as exc:
        report.checks.append(CheckResult(name, False, error=str(exc), error_type=type(exc).__name__))


def verify_all(
    p: SystemParams,
    ed_trunc: FockTruncation | None = None,
    liouvillian_trunc: FockTruncation = LIOUVILLIAN_TRUNCATION,
    mode_trunc: FockTruncation = MODE_TRUNCATION,
    rates: RateSet | None = None,
    n_times: int = 50,
) -> VerificationReport:
    """Compare every closed form against its oracle and collect the results.

    ``rates`` replaces the rate set used on the closed-form side only, which
    lets callers check that a corrupted rate is caught. Checks never raise;
    failures and oracle errors are recorded in the report.
    """
    if ed_trunc is None:
        ed_trunc = FockTruncation(ED_TRUNCATION.n_max, ground_photon_tolerance(p))
    report = VerificationReport(p)
    spec = spectrum(p)
    has_bath = p.gamma_L > 0 or p.gamma_R > 0

    def ed_spectrum():
        levels = ed_levels_converged(p, ed_trunc, count=10)
        analytic = np.array(low_lying_levels(spec, 10)) - eigenenergy(spec, 0, 0)
        scale = max(p.omega_c, float(np.max(np.abs(analytic))))
        return float(np.max(np.abs(levels - analytic))) / scale, 1e-8, "lowest 10 excitation energies"

    def ed_photons():
        from .virtual import virtual_photons_ground

        oracle = ed_ground_state_photons(p, ed_trunc)
        exact = virtual_photons_ground(p)
        dev = abs(oracle - exact) / max(abs(exact), 1e-300) if exact else abs(oracle)
        return dev, ed_trunc.convergence_tol, f"ed={oracle:.12g} analytic={exact:.12g}"

    _run(report, "ed_spectrum", ed_spectrum)
    _run(report, "ed_ground_photons", ed_photons)

    if has_bath:
        full = {}

        def full_generator():
            if "L" not in full:
                L = build_liouvillian(p, liouvillian_trunc).matrix
                full["L"] = L
                full["rho"] = steady_state(L)
            return full["L"], full["rho"]

        def trace_preservation():
            L, _ = full_generator()
            d = liouvillian_trunc.n_max + 1
            ident = np.eye(d * d).reshape(-1, order="F")
            scale = max(1.0, float(np.max(np.abs(L.data))))
            return float(np.max(np.abs(L.conj().T @ ident))) / scale, 1e-12, "identity is a left null vector"

        def unique_zero():
            L, _ = full_generator()
            vals = liouvillian_spectrum_near_zero(L, k=3)
            n_zero = int(np.sum(np.abs(vals) < 1e-10))
            return abs(vals[0]) if n_zero == 1 else math.inf, 1e-10, f"smallest |lambda| = {np.abs(vals[:3])}"

        def positivity():
            _, rho = full_generator()
            smallest = float(np.min(np.linalg.eigvalsh(rho)))
            return max(0.0, -smallest), 1e-10, f"min eigenvalue {smallest:.3e}"

        def factorisation():
            _, rho = full_generator()
            d = liouvillian_trunc.n_max + 1
            ch = oracle_channels(p)
            rx = steady_state(build_mode_liouvillian(spec.omega_x, [ch["L"]["x"], ch["R"]["x"]], liouvillian_trunc.n_max))
            ry = steady_state(build_mode_liouvillian(spec.omega_y, [ch["L"]["y"], ch["R"]["y"]], liouvillian_trunc.n_max))
            dev = float(np.max(np.abs(rho - np.kron(rx, ry))))
            return dev, 1e-10, f"two-mode vs product of mode steady states at n_max={d - 1}"

        oracle_pops = {}

        def populations():
            pops = liouvillian_steady_populations(p, mode_trunc)
            oracle_pops["ss"] = pops
            closed = polariton_populations(p, math.inf, rates)
            dev = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(pops, closed))
            return dev, 1e-8, f"oracle={pops} closed={closed}"

        def gibbs():
            T = p.T_L
            q = p.replace(T_R=T)
            pops = liouvillian_steady_populations(q, mode_trunc)
            target = (bose_einstein(spec.omega_x, T), bose_einstein(spec.omega_y, T))
            dev = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(pops, target))
            return dev, 1e-8, f"T_L=T_R={T}"

        def ode():
            gam = [g for g in _oracle_relaxation(p) if g > 0]
            t_end = 10.0 / min(gam)
            t = np.linspace(0.0, t_end, n_times)
            traj = integrate_moments(p, t)
            closed = np.array([polariton_populations(p, ti, rates) for ti in t])
            return float(np.max(np.abs(traj - closed))), 1e-8, f"{n_times} times on [0, {t_end:.4g}]"

        def heat():
            if "ss" not in oracle_pops:
                oracle_pops["ss"] = liouvillian_steady_populations(p, mode_trunc)
            j_oracle = left_current_from_populations(p, *oracle_pops["ss"])
            j = heat_current_gme(p, include_lme=False).j_left
            return abs(j_oracle - j), 1e-6 * abs(j) + 1e-9 * _current_scale(p), f"oracle={j_oracle:.12g} closed={j:.12g}"

        def trajectory_heat():
            gam = [g for g in _oracle_relaxation(p) if g > 0]
            t = np.linspace(0.0, 40.0 / min(gam), n_times)
            final = integrate_moments(p, t)[-1]
            j_traj = left_current_from_populations(p, *final)
            j = heat_current_gme(p, include_lme=False).j_left
            return abs(j_traj - j), 1e-6 * abs(j) + 1e-8 * _current_scale(p), f"instantaneous current at t={t[-1]:.4g} vs steady state"

        _run(report, "liouvillian_trace", trace_preservation)
        _run(report, "liouvillian_unique_zero", unique_zero)
        _run(report, "liouvillian_positivity", positivity)
        _run(report, "liouvillian_factorisation", factorisation)
        _run(report, "steady_populations", populations)
        _run(report, "gibbs_state", gibbs)
        _run(report, "ode_trajectory", ode)
        _run(report, "steady_heat_current", heat)
        _run(report, "trajectory_heat_current", trajectory_heat)
    return report


def _current_scale(p: SystemParams) -> float:
    # size of the individual terms in the left current; population errors enter through it
    ch = oracle_channels(p)["L"]
    spec = spectrum(p)
    return 2.0 * sum(w * c.kappa * max(1.0, c.occupation)
                     for w, c in ((spec.omega_x, ch["x"]), (spec.omega_y, ch["y"])))


def _oracle_relaxation(p: SystemParams) -> tuple[float, float]:
    ch = oracle_channels(p)
    return (ch["L"]["x"].kappa + ch["R"]["x"].kappa, ch["L"]["y"].kappa + ch["R"]["y"].kappa)
