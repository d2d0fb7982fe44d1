"""Closed-form evolution for cross-Kerr interaction with loss and dephasing.

Sign convention: a positive Kerr rate chi means number-basis kets acquire
the phase exp(+i chi t n1 n2), so the density-matrix element (k,l;m,n)
rotates as exp(+i chi t (km - ln)). The oracle builder in
:mod:`kerrloss.lindblad` uses the same convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, expm1, hypot, sin

import numpy as np

from . import _kernels
from .errors import DephasingUnsupported, UncorrelatedOnlyError
from .fock import (FockCutoff, TwoModeDensity, coherent_density,
                   coherent_vector, require_adequate)

_REL_TOL = 1e-12


@dataclass(frozen=True)
class KerrLossParams:
    """Model rates: Kerr coupling, photon loss and dephasing.

    ``chi`` is the pure cross-Kerr rate (coupling matrix entries
    chi_12 = chi_21 = chi/2, zero self-Kerr). ``chi_matrix`` optionally
    replaces it with a general symmetric 2x2 coupling; only the brute-force
    integrator accepts that case. Cross rates obey gamma1*gamma2 >= gamma12^2
    and d1*d2 >= d12^2.
    """

    chi: float = 0.0
    gamma1: float = 0.0
    gamma2: float = 0.0
    gamma12: float = 0.0
    d1: float = 0.0
    d2: float = 0.0
    d12: float = 0.0
    chi_matrix: np.ndarray | None = field(default=None)

    def __post_init__(self):
        for name in ("gamma1", "gamma2", "d1", "d2"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        slack1 = _REL_TOL * max(self.gamma1 * self.gamma2, 1.0)
        if self.gamma12 ** 2 > self.gamma1 * self.gamma2 + slack1:
            raise ValueError("gamma1*gamma2 >= gamma12^2 violated")
        slack2 = _REL_TOL * max(self.d1 * self.d2, 1.0)
        if self.d12 ** 2 > self.d1 * self.d2 + slack2:
            raise ValueError("d1*d2 >= d12^2 violated")
        if self.chi_matrix is not None:
            m = np.asarray(self.chi_matrix, float)
            if m.shape != (2, 2):
                raise ValueError("chi_matrix must be 2x2")
            object.__setattr__(self, "chi_matrix", m)

    def chi_mat(self) -> np.ndarray:
        """Effective coupling matrix chi_kl."""
        if self.chi_matrix is not None:
            return self.chi_matrix
        return np.array([[0.0, self.chi / 2.0], [self.chi / 2.0, 0.0]])


@dataclass(frozen=True)
class ValidityReport:
    """Condition values and booleans for the pure-state approximants."""

    values: dict
    satisfied: dict

    @property
    def all_ok(self) -> bool:
        return all(self.satisfied.values())


def _cexpm1(w: complex) -> complex:
    """exp(w) - 1, stable for small |w| (complex expm1)."""
    x, y = w.real, w.imag
    # expm1(x)cos(y) - 2 sin^2(y/2) + i e^x sin(y); exact cancellation-free
    return complex(expm1(x) * cos(y) - 2.0 * sin(0.5 * y) ** 2,
                   np.exp(x) * sin(y))


def _f_series(rate, detuning_index, chi, alpha_sq, t):
    zt = (1j * chi * detuning_index - rate) * t
    s = 1.0 + 0j
    term = 1.0 + 0j
    for j in range(1, 6):
        term = term * zt / (j + 1.0)
        s += term
    return rate * t * s * alpha_sq


def _f_direct(rate, detuning_index, chi, alpha_sq, t):
    z = 1j * chi * detuning_index - rate
    return rate * _cexpm1(z * t) / z * alpha_sq


def f_function(rate: float, detuning_index: int, chi: float,
               alpha_sq: float, t: float) -> complex:
    """gamma (e^{zt} - 1)/z * |alpha|^2 with z = i chi k - gamma.

    Taylor branch below |zt| = 1e-6 covers the z -> 0 double limit.
    """
    if rate < 0 or t < 0:
        raise ValueError("rate and t must be non-negative")
    z = 1j * chi * detuning_index - rate
    if abs(z * t) < 1e-6:
        return _f_series(rate, detuning_index, chi, alpha_sq, t)
    return _f_direct(rate, detuning_index, chi, alpha_sq, t)


def _f_row(rate, chi, alpha_sq, t, n_max, index_scale=1):
    """f_function over index differences -n_max..n_max, as a lookup row."""
    out = np.empty(2 * n_max + 1, complex)
    for j in range(-n_max, n_max + 1):
        out[j + n_max] = f_function(rate, index_scale * j, chi, alpha_sq, t)
    return out


def _require_uncorrelated(p: KerrLossParams):
    if p.gamma12 != 0.0 or p.d12 != 0.0:
        raise UncorrelatedOnlyError(
            "closed-form solution requires gamma12 = d12 = 0"
        )


def evolve_exact(alpha1: complex, alpha2: complex, t: float,
                 p: KerrLossParams, cutoff: FockCutoff,
                 renormalize: bool = True) -> TwoModeDensity:
    """Exact number-basis state for uncorrelated reservoirs.

    rho[k,l,m,n] = e^{-|a1|^2-|a2|^2} a1^k a1*^l a2^m a2*^n / sqrt(k!l!m!n!)
                   * exp(-[d1 (k-l)^2 + d2 (m-n)^2] t / 2)
                   * exp(i chi t (km-ln) - gamma1 t (k+l)/2 - gamma2 t (m+n)/2
                         + f2_mn + f1_kl)

    With ``renormalize`` the truncated tensor is scaled to unit trace and
    flagged normalized; otherwise the raw (sub-normalized) tensor is returned
    so the truncation trace defect can be inspected.
    """
    _require_uncorrelated(p)
    if p.chi_matrix is not None:
        raise ValueError("evolve_exact handles the pure cross-Kerr coupling; "
                         "general chi_matrix goes through the oracle")
    if t < 0:
        raise ValueError("t must be non-negative")
    require_adequate(alpha1, cutoff)
    require_adequate(alpha2, cutoff)

    d = cutoff.dim
    n = np.arange(d)
    c1 = coherent_vector(alpha1, cutoff) * np.exp(0.5 * abs(alpha1) ** 2)
    c2 = coherent_vector(alpha2, cutoff) * np.exp(0.5 * abs(alpha2) ** 2)

    f1 = _f_row(p.gamma2, p.chi, abs(alpha2) ** 2, t, cutoff.n_max)
    f2 = _f_row(p.gamma1, p.chi, abs(alpha1) ** 2, t, cutoff.n_max)
    diff = n[:, None] - n[None, :]
    ksum = n[:, None] + n[None, :]

    A1 = (c1[:, None] * c1.conj()[None, :]
          * np.exp(-0.5 * p.d1 * diff ** 2 * t - 0.5 * p.gamma1 * t * ksum
                   + f1[diff + cutoff.n_max]))
    A2 = (c2[:, None] * c2.conj()[None, :]
          * np.exp(-0.5 * p.d2 * diff ** 2 * t - 0.5 * p.gamma2 * t * ksum
                   + f2[diff + cutoff.n_max]))
    U = np.exp(1j * p.chi * t * np.outer(n, n))

    tensor = _kernels.kerr_product_tensor(A1, A2, U)
    tensor *= np.exp(-abs(alpha1) ** 2 - abs(alpha2) ** 2)
    if renormalize:
        tr = np.einsum("kkmm->", tensor).real
        tensor /= tr
        return TwoModeDensity(tensor, cutoff, normalized=True)
    return TwoModeDensity(tensor, cutoff, normalized=False)


def purity_exact(alpha1: complex, alpha2: complex, t: float,
                 p: KerrLossParams, term_tol: float = 1e-14,
                 n_window: int = 128) -> float:
    """Tr(rho(t)^2) from the quadruple sum; no-dephasing case only.

    The sum factorizes into two double sums, each truncated when the
    photon-number weight falls below ``term_tol``.
    """
    _require_uncorrelated(p)
    if p.d1 != 0.0 or p.d2 != 0.0:
        raise DephasingUnsupported("purity_exact requires d1 = d2 = 0")
    if t < 0:
        raise ValueError("t must be non-negative")

    def mode_sum(alpha_own, gamma_own, alpha_other, gamma_other):
        lam = abs(alpha_own) ** 2
        w = [np.exp(-lam)]
        k = 0
        while True:
            k += 1
            nxt = w[-1] * lam / k
            if k > n_window or (nxt < term_tol and k > lam + 1):
                break
            w.append(nxt)
        w = np.asarray(w)
        N = w.size
        decay = w * np.exp(-gamma_own * t * np.arange(N))
        f = _f_row(gamma_other, p.chi, abs(alpha_other) ** 2, t, N - 1)
        diff = np.arange(N)[:, None] - np.arange(N)[None, :]
        B = np.outer(decay, decay) * np.exp(2.0 * f[diff + N - 1].real)
        return B.sum()

    s1 = mode_sum(alpha1, p.gamma1, alpha2, p.gamma2)
    s2 = mode_sum(alpha2, p.gamma2, alpha1, p.gamma1)
    return float(s1 * s2)


def _entangled_pure_state(a1t: complex, a2t: complex, chi: float, t: float,
                          cutoff: FockCutoff) -> TwoModeDensity:
    """Render sum_k c_k |k> (x) |a2t e^{i chi k t}> at the cutoff."""
    d = cutoff.dim
    c = coherent_vector(a1t, cutoff)
    psi = np.zeros(d * d, complex)
    for k in range(d):
        psi[k * d:(k + 1) * d] = c[k] * coherent_vector(
            a2t * np.exp(1j * chi * k * t), cutoff)
    psi /= np.linalg.norm(psi)
    mat = np.outer(psi, psi.conj())
    return TwoModeDensity.from_matrix(mat, cutoff, normalized=True)


def _poisson_window(alpha: complex, weight_tol: float = 1e-6) -> int:
    """Max index spread |k - l| over numbers with Poisson weight > tol."""
    lam = abs(alpha) ** 2
    if lam == 0.0:
        return 0
    w = np.exp(-lam)
    lo = None
    hi = 0
    k = 0
    while True:
        if w > weight_tol:
            if lo is None:
                lo = k
            hi = k
        k += 1
        w_next = w * lam / k
        if w_next < weight_tol and k > lam:
            break
        w = w_next
    return (hi - lo) if lo is not None else 0


def short_time_state(alpha1: complex, alpha2: complex, t: float,
                     p: KerrLossParams,
                     cutoff: FockCutoff) -> tuple[TwoModeDensity, ValidityReport]:
    """Short-time pure-state approximant with drift-corrected amplitudes.

    a1(t) = a1 exp(-gamma1 t/2 + (i/2) gamma2 chi |a2|^2 t^2) and the
    symmetric partner; the cross-phase sign follows the series expansion of
    the f-functions. The report evaluates |i chi t dk - gamma t| < 1 over the
    occupied photon window, and the purity-preservation margins at a
    factor-10 surrogate for "much greater".
    """
    _require_uncorrelated(p)
    a1t = alpha1 * np.exp(-0.5 * p.gamma1 * t
                          + 0.5j * p.gamma2 * p.chi * abs(alpha2) ** 2 * t * t)
    a2t = alpha2 * np.exp(-0.5 * p.gamma2 * t
                          + 0.5j * p.gamma1 * p.chi * abs(alpha1) ** 2 * t * t)
    require_adequate(a1t, cutoff)
    require_adequate(a2t, cutoff)
    state = _entangled_pure_state(a1t, a2t, p.chi, t, cutoff)

    d1w = _poisson_window(alpha1)
    d2w = _poisson_window(alpha2)
    cond1 = hypot(p.chi * t * d2w, p.gamma1 * t)
    cond2 = hypot(p.chi * t * d1w, p.gamma2 * t)

    def margin(gamma, dw):
        lhs = 1.0 - 0.5 * gamma * t
        rhs = max(gamma * gamma, abs(gamma * gamma - p.chi ** 2 * dw * dw)) \
            * t * t / 6.0
        return lhs, rhs

    lhs1, rhs1 = margin(p.gamma1, d2w)
    lhs2, rhs2 = margin(p.gamma2, d1w)
    report = ValidityReport(
        values={"kerr_loss_mode1": cond1, "kerr_loss_mode2": cond2,
                "expansion_lhs1": lhs1, "expansion_rhs1": rhs1,
                "expansion_lhs2": lhs2, "expansion_rhs2": rhs2},
        satisfied={"kerr_loss_mode1": cond1 < 1.0,
                   "kerr_loss_mode2": cond2 < 1.0,
                   "expansion_mode1": lhs1 >= 10.0 * rhs1,
                   "expansion_mode2": lhs2 >= 10.0 * rhs2},
    )
    return state, report


def _long_time_bracket(gamma: float, t: float) -> float:
    """t e^{-gamma t} - (1 - e^{-gamma t})/gamma, stable near gamma t = 0."""
    x = gamma * t
    if x < 1e-6:
        return t * x * (-0.5 + x * (1.0 / 3.0 - x / 8.0))
    return t * np.exp(-x) + expm1(-x) / gamma


def long_time_state(alpha1: complex, alpha2: complex, t: float,
                    p: KerrLossParams,
                    cutoff: FockCutoff) -> tuple[TwoModeDensity, ValidityReport]:
    """Large-loss pure-state approximant, valid at arbitrary times.

    Amplitude phases carry -i chi |a_other|^2 [t e^{-gt} - (1-e^{-gt})/g].
    """
    _require_uncorrelated(p)
    a1t = alpha1 * np.exp(-0.5 * p.gamma1 * t - 1j * p.chi * abs(alpha2) ** 2
                          * _long_time_bracket(p.gamma2, t))
    a2t = alpha2 * np.exp(-0.5 * p.gamma2 * t - 1j * p.chi * abs(alpha1) ** 2
                          * _long_time_bracket(p.gamma1, t))
    require_adequate(a1t, cutoff)
    require_adequate(a2t, cutoff)
    state = _entangled_pure_state(a1t, a2t, p.chi, t, cutoff)

    def second_order(gamma):
        x = gamma * t
        if x < 1e-4:
            return abs(-gamma * t ** 3 / 6.0 + (gamma * t * t) ** 2 / 8.0)
        return abs((t * t / 2.0 + t / gamma + 1.0 / gamma ** 2) * np.exp(-x)
                   - 1.0 / gamma ** 2)

    d1w = _poisson_window(alpha1)
    d2w = _poisson_window(alpha2)
    lhs1 = -expm1(-p.gamma2 * t)
    rhs1 = p.chi ** 2 * d1w * d1w * second_order(p.gamma2)
    lhs2 = -expm1(-p.gamma1 * t)
    rhs2 = p.chi ** 2 * d2w * d2w * second_order(p.gamma1)
    report = ValidityReport(
        values={"large_loss_lhs1": lhs1, "large_loss_rhs1": rhs1,
                "large_loss_lhs2": lhs2, "large_loss_rhs2": rhs2},
        satisfied={"large_loss_mode1": lhs1 >= 10.0 * rhs1,
                   "large_loss_mode2": lhs2 >= 10.0 * rhs2},
    )
    return state, report


def single_mode_decay(alpha: complex, gamma: float, t: float,
                      cutoff: FockCutoff):
    """Coherent state under pure loss stays coherent: |alpha e^{-gamma t/2}>."""
    if gamma < 0 or t < 0:
        raise ValueError("gamma and t must be non-negative")
    require_adequate(alpha, cutoff)
    return coherent_density(alpha * np.exp(-0.5 * gamma * t), cutoff)


@dataclass(frozen=True)
class LambdaRates:
    chi_matrix: np.ndarray
    gamma1: float
    gamma2: float
    gamma12: float


def lambda_system_rates(g1: float, g2: float, delta1: float, delta2: float,
                        delta: float, omega: float,
                        gamma_atom: float) -> LambdaRates:
    """Effective Kerr matrix and loss rates of the driven Lambda scheme.

    gamma_{1,2} = gamma g_{1,2}^2 / (Delta1 -/+ delta)^2 and
    gamma12 = gamma g1 g2 / (Delta1^2 - delta^2); a single physical
    reservoir, so gamma1*gamma2 = gamma12^2 identically. The coupling matrix
    is returned in the solver's ket-phase convention (positive entry chi_kl
    means kets rotate as exp(+i chi_kl t n_k n_l)).
    """
    from .errors import DegenerateDetuning

    if omega == 0:
        raise ValueError("omega must be nonzero")
    if delta1 == delta or delta1 == -delta:
        raise DegenerateDetuning("Delta1 = +/- delta")
    q1 = g1 / (delta1 - delta)
    q2 = g2 / (delta1 + delta)
    gamma1 = gamma_atom * q1 * q1
    gamma2 = gamma_atom * q2 * q2
    gamma12 = gamma_atom * q1 * q2
    c = np.array([g1 * q1, g2 * q2])
    chi_matrix = -(delta2 / (2.0 * omega * omega)) * np.outer(c, c)
    return LambdaRates(chi_matrix, gamma1, gamma2, gamma12)
