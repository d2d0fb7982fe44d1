"""Brute-force Markovian master-equation integrator on the truncated space.

The generator follows d rho/dt = -i[H, rho] + (1/2) sum_j rate_j L(b_j) rho
with L(b) rho = 2 b rho b^dag - b^dag b rho - rho b^dag b, so every jump
enters with prefactor rate/2. Integration is an embedded Dormand-Prince
4(5) scheme on the matrix-valued ODE with max-abs error control per unit
time and Hermitian symmetrization after each accepted step. When the
Hamiltonian is diagonal in the number basis (every Kerr generator is), its
phases are removed exactly by a rotating-frame transformation so the step
size is set by the dissipative scales only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analytic import KerrLossParams
from .errors import RateDecompositionError, StepSizeUnderflow, ZeroCoupling
from .fock import FockCutoff, TwoModeDensity, destroy_op, mode_op, number_op

_RATE_TOL = 1e-15


@dataclass(frozen=True)
class JumpTerm:
    rate: float
    operator: np.ndarray

    def __post_init__(self):
        if self.rate < 0:
            raise ValueError("jump rate must be non-negative")


@dataclass(frozen=True)
class LindbladGenerator:
    hamiltonian: np.ndarray
    jumps: list[JumpTerm] = field(default_factory=list)
    cutoff: FockCutoff = FockCutoff(1)

    def __post_init__(self):
        H = self.hamiltonian
        if np.abs(H - H.conj().T).max() > 1e-12:
            raise ValueError("hamiltonian must be Hermitian within 1e-12")
        dim = H.shape[0]
        for j in self.jumps:
            if j.operator.shape != (dim, dim):
                raise ValueError("jump operator dimension mismatch")


def kerr_hamiltonian(chi_mat: np.ndarray, cutoff: FockCutoff) -> np.ndarray:
    """-sum_kl chi_kl n_k n_l on the two-mode space.

    The minus sign puts the oracle in the same convention as the analytic
    solver: positive chi rotates kets as exp(+i chi t n_k n_l).
    """
    n1 = mode_op(number_op(cutoff), 1, cutoff)
    n2 = mode_op(number_op(cutoff), 2, cutoff)
    ns = (n1, n2)
    H = np.zeros_like(n1)
    for k in range(2):
        for l in range(2):
            if chi_mat[k, l] != 0.0:
                H -= chi_mat[k, l] * (ns[k] @ ns[l])
    return H


def build_cross_kerr_generator(p: KerrLossParams,
                               cutoff: FockCutoff) -> LindbladGenerator:
    """Generator of the correlated-reservoir master equation.

    Jump set: a1 at (gamma1-gamma12), a2 at (gamma2-gamma12), a1+a2 at
    gamma12, n1 at (d1-d12), n2 at (d2-d12), n1+n2 at d12; zero-rate terms
    omitted. Requires gamma12 <= min(gamma1, gamma2) and d12 <= min(d1, d2)
    so the listed rates are non-negative.
    """
    a1 = mode_op(destroy_op(cutoff), 1, cutoff)
    a2 = mode_op(destroy_op(cutoff), 2, cutoff)
    n1 = mode_op(number_op(cutoff), 1, cutoff)
    n2 = mode_op(number_op(cutoff), 2, cutoff)

    derived = [
        (p.gamma1 - p.gamma12, a1),
        (p.gamma2 - p.gamma12, a2),
        (p.gamma12, a1 + a2),
        (p.d1 - p.d12, n1),
        (p.d2 - p.d12, n2),
        (p.d12, n1 + n2),
    ]
    jumps = []
    for rate, op in derived:
        if rate < -_RATE_TOL:
            raise RateDecompositionError(
                "cross rates must not exceed the individual rates "
                f"(derived rate {rate:.3g} < 0)"
            )
        if rate > 0:
            jumps.append(JumpTerm(rate, op))
    return LindbladGenerator(kerr_hamiltonian(p.chi_mat(), cutoff), jumps, cutoff)


def collective_mode(g1: float, g2: float, cutoff: FockCutoff) -> np.ndarray:
    """C = (g1 a1 + g2 a2)/G with G = sqrt(g1^2 + g2^2)."""
    G2 = g1 * g1 + g2 * g2
    if G2 == 0.0:
        raise ZeroCoupling("g1 = g2 = 0")
    a1 = mode_op(destroy_op(cutoff), 1, cutoff)
    a2 = mode_op(destroy_op(cutoff), 2, cutoff)
    return (g1 * a1 + g2 * a2) / np.sqrt(G2)


def build_collective_generator(g1: float, g2: float, delta_w: float,
                               chi_c: float, gamma_bar: float, d_bar: float,
                               cutoff: FockCutoff) -> LindbladGenerator:
    """Common-reservoir generator: H = dw C^dag C + chi_c (C^dag C)^2.

    The source equations carry the dissipators as gamma_bar L(C) and
    d_bar L(C^dag C) without the 1/2 prefactor, so the stored rates are
    doubled to land in this module's rate/2 convention.
    """
    if gamma_bar < 0 or d_bar < 0:
        raise ValueError("rates must be non-negative")
    C = collective_mode(g1, g2, cutoff)
    CdC = C.conj().T @ C
    H = delta_w * CdC + chi_c * (CdC @ CdC)
    jumps = []
    if gamma_bar > 0:
        jumps.append(JumpTerm(2.0 * gamma_bar, C))
    if d_bar > 0:
        jumps.append(JumpTerm(2.0 * d_bar, CdC))
    return LindbladGenerator(H, jumps, cutoff)


# ---------------------------------------------------------------------------
# Dormand-Prince 4(5) on the matrix ODE
# ---------------------------------------------------------------------------

_DP_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
)
_DP_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0)
_DP_B5 = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84)
_DP_E = (71 / 57600, 0.0, -71 / 16695, 71 / 1920, -17253 / 339200, 22 / 525,
         -1 / 40)


class _Rhs:
    """Dissipator rhs, optionally in the diagonal-Hamiltonian frame."""

    def __init__(self, gen: LindbladGenerator):
        H = gen.hamiltonian
        hdiag = np.diag(H).real
        self.rotating = bool(np.all(H == np.diag(np.diag(H))))
        self.theta = hdiag[:, None] - hdiag[None, :] if self.rotating else None
        G = np.zeros_like(H)
        if not self.rotating:
            G = G - 1j * H
        self.feeds = []
        for j in gen.jumps:
            b = j.operator
            G = G - 0.5 * j.rate * (b.conj().T @ b)
            self.feeds.append((j.rate, b, b.conj().T))
        self.G = G

    def __call__(self, t: float, y: np.ndarray) -> np.ndarray:
        if self.rotating:
            phase = np.exp(-1j * self.theta * t)
            lab = phase * y
        else:
            lab = y
        out = self.G @ lab + lab @ self.G.conj().T
        for rate, b, bd in self.feeds:
            out += rate * (b @ lab @ bd)
        if self.rotating:
            out = np.conj(phase) * out
        return out

    def to_lab(self, t: float, y: np.ndarray) -> np.ndarray:
        if self.rotating:
            return np.exp(-1j * self.theta * t) * y
        return y


def _dopri_step(rhs, t, y, h, k1):
    ks = [k1]
    for i in range(1, 6):
        acc = _DP_A[i][0] * ks[0]
        for j in range(1, i):
            acc = acc + _DP_A[i][j] * ks[j]
        ks.append(rhs(t + _DP_C[i] * h, y + h * acc))
    y5 = y + h * sum(b * k for b, k in zip(_DP_B5, ks) if b != 0.0)
    k7 = rhs(t + h, y5)
    err = sum(e * k for e, k in zip(_DP_E, ks + [k7]) if e != 0.0)
    return y5, float(np.abs(err).max())


def integrate(rho0: TwoModeDensity, gen: LindbladGenerator, t: float,
              tol: float = 1e-9) -> TwoModeDensity:
    """Evolve rho0 for time t with local error <= tol per unit time."""
    if t < 0:
        raise ValueError("t must be non-negative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if t == 0.0:
        return TwoModeDensity(rho0.tensor.copy(), rho0.cutoff, rho0.normalized)

    rhs = _Rhs(gen)
    y = rho0.matrix.astype(complex)
    tau = 0.0
    k1 = rhs(0.0, y)
    scale = np.abs(k1).max()
    h = min(t, 0.1 / scale) if scale > 0 else t
    h_floor = 1e-12 * t
    while tau < t:
        h = min(h, t - tau)
        if h < h_floor:
            raise StepSizeUnderflow(f"step {h:.3e} below 1e-12 * t")
        y_new, errnorm = _dopri_step(rhs, tau, y, h, k1)
        if errnorm <= tol:
            tau += h
            y = 0.5 * (y_new + y_new.conj().T)
            if tau < t:
                k1 = rhs(tau, y)
        factor = 0.9 * (tol / errnorm) ** 0.25 if errnorm > 0 else 5.0
        h *= min(5.0, max(0.2, factor))

    y = rhs.to_lab(t, y)
    y = 0.5 * (y + y.conj().T)
    return TwoModeDensity.from_matrix(y, rho0.cutoff, rho0.normalized)


def generator_action(gen: LindbladGenerator, rho: TwoModeDensity) -> np.ndarray:
    """d rho/dt at the given state, evaluated from the defining form."""
    y = rho.matrix.astype(complex)
    H = gen.hamiltonian
    out = -1j * (H @ y - y @ H)
    for j in gen.jumps:
        b = j.operator
        bd = b.conj().T
        bdb = bd @ b
        out += j.rate * (b @ y @ bd - 0.5 * (bdb @ y + y @ bdb))
    return out


def steady_state_probe(rho0: TwoModeDensity, gen: LindbladGenerator,
                       horizon: float, settle_tol: float = 1e-10,
                       tol: float = 1e-9,
                       n_checks: int = 50) -> tuple[TwoModeDensity, bool]:
    """Integrate until max|d rho/dt| < settle_tol or the horizon is reached."""
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    state = rho0
    chunk = horizon / n_checks
    elapsed = 0.0
    while elapsed < horizon:
        state = integrate(state, gen, chunk, tol)
        elapsed += chunk
        if np.abs(generator_action(gen, state)).max() < settle_tol:
            return state, True
    return state, False
