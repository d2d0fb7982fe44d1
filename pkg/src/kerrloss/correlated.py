"""Correlated-reservoir machinery: mode rotation, cat generation, the
detector-conditioned state, and beam-splitting by decoherence.

The rotated modes b1 = a1 cos(phi) - a2 sin(phi), b2 = a2 cos(phi)
+ a1 sin(phi) diagonalize the loss matrix [[g1, g12], [g12, g2]] when
tan(2 phi) = 2 gamma12 / (gamma2 - gamma1). For the symmetric Hamiltonian
chi (n1 + n2)^2 the rotation leaves the unitary part invariant, which is
what makes the correlated problem exactly solvable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import atan2, cos, pi, sin

import numpy as np

from .analytic import KerrLossParams, f_function
from .errors import (DephasingUnsupported, NotFullyCorrelated,
                     SubspaceViolation, TruncationError)
from .fock import (FockCutoff, SingleModeDensity, TwoModeDensity,
                   coherent_vector, destroy_op, fock_two_mode, mode_op,
                   require_adequate)


@dataclass(frozen=True)
class RotationFrame:
    phi: float
    gamma_bar_1: float
    gamma_bar_2: float
    alpha_bar_1: complex
    alpha_bar_2: complex


@dataclass(frozen=True)
class CatReference:
    """Weighted superposition of two-mode coherent states.

    Amplitude-weight pairs are kept symbolic so overlap-aware normalization
    stays exact at any cutoff.
    """

    components: tuple
    tag: str = ""

    def norm(self) -> float:
        total = 0.0j
        for wj, (a1j, a2j) in self.components:
            for wk, (a1k, a2k) in self.components:
                ov = np.exp(
                    -0.5 * (abs(a1j) ** 2 + abs(a1k) ** 2) + np.conj(a1j) * a1k
                    - 0.5 * (abs(a2j) ** 2 + abs(a2k) ** 2) + np.conj(a2j) * a2k
                )
                total += np.conj(wj) * wk * ov
        return float(np.sqrt(total.real))

    def to_vector(self, cutoff: FockCutoff) -> np.ndarray:
        """Normalized state vector in the flattened two-mode space."""
        psi = np.zeros(cutoff.dim ** 2, complex)
        for w, (a1, a2) in self.components:
            require_adequate(a1, cutoff)
            require_adequate(a2, cutoff)
            psi += w * np.kron(coherent_vector(a1, cutoff),
                               coherent_vector(a2, cutoff))
        psi /= np.linalg.norm(psi)
        return psi

    def to_two_mode_density(self, cutoff: FockCutoff) -> TwoModeDensity:
        psi = self.to_vector(cutoff)
        return TwoModeDensity.from_matrix(np.outer(psi, psi.conj()), cutoff)


@dataclass(frozen=True)
class AsymptoticCatReport:
    """Validity data for the fully-correlated asymptotic cat."""

    kerr_vs_loss_ratio: float

    @property
    def kerr_negligible(self) -> bool:
        return self.kerr_vs_loss_ratio < 0.1


def rotation_frame(p: KerrLossParams, alpha1: complex,
                   alpha2: complex) -> RotationFrame:
    """Rotation angle, diagonal rates and rotated initial amplitudes.

    The branch is fixed to phi in (-pi/4, pi/4] so gamma_bar_1 is the
    smaller rate when gamma12 > 0 and gamma1 = gamma2.
    """
    if p.d1 != 0.0 or p.d2 != 0.0 or p.d12 != 0.0:
        raise DephasingUnsupported("rotation frame defined without dephasing")
    phi = 0.5 * atan2(2.0 * p.gamma12, p.gamma2 - p.gamma1)
    if phi > pi / 4:
        phi -= pi / 2
    elif phi <= -pi / 4:
        phi += pi / 2
    c, s = cos(phi), sin(phi)
    g_bar_1 = p.gamma1 * c * c + p.gamma2 * s * s - p.gamma12 * sin(2 * phi)
    g_bar_2 = p.gamma2 * c * c + p.gamma1 * s * s + p.gamma12 * sin(2 * phi)
    a_bar_1 = alpha1 * c - alpha2 * s
    a_bar_2 = alpha2 * c + alpha1 * s
    return RotationFrame(phi, max(g_bar_1, 0.0), max(g_bar_2, 0.0),
                         a_bar_1, a_bar_2)


def beamsplitter_unitary(phi: float, cutoff: FockCutoff) -> np.ndarray:
    """V with V^dag a1 V = a1 cos(phi) - a2 sin(phi) (and b2 likewise)."""
    a1 = mode_op(destroy_op(cutoff), 1, cutoff)
    a2 = mode_op(destroy_op(cutoff), 2, cutoff)
    K = a1.conj().T @ a2 - a2.conj().T @ a1
    Hk = 1j * K  # Hermitian
    w, U = np.linalg.eigh(Hk)
    return (U * np.exp(1j * phi * w)) @ U.conj().T


def rotate_state(rho: TwoModeDensity, phi: float) -> TwoModeDensity:
    """Re-express the state in the rotated-mode Fock basis: V rho V^dag."""
    V = beamsplitter_unitary(phi, rho.cutoff)
    mat = V @ rho.matrix @ V.conj().T
    return TwoModeDensity.from_matrix(mat, rho.cutoff, rho.normalized)


def lossless_cat_reference(alpha1: complex, alpha2: complex) -> CatReference:
    """(i |a1, a2> + |-a1, -a2>)/sqrt(2): the chi t = pi/2 symmetric-Kerr cat."""
    w = 1.0 / np.sqrt(2.0)
    return CatReference(
        components=((1j * w, (alpha1, alpha2)), (w, (-alpha1, -alpha2))),
        tag="lossless",
    )


def correlated_cat_asymptotic(
        alpha1: complex, alpha2: complex,
        p: KerrLossParams) -> tuple[CatReference, AsymptoticCatReport]:
    """Large-loss cat for a fully correlated reservoir (gamma_bar_1 = 0).

    Amplitudes shrink to a1~ = a1 cos^2(phi) - a2 cos(phi) sin(phi) and
    a2~ = a2 sin^2(phi) - a1 cos(phi) sin(phi); decoherence is avoided
    entirely. Assumes gamma_bar_2 t >> 1; the Kerr-versus-loss ratio
    2 chi |a_bar_1|^2 / gamma_bar_2 is reported, not enforced.
    """
    prod = p.gamma1 * p.gamma2
    if abs(prod - p.gamma12 ** 2) > 1e-12 * max(prod, 1e-300):
        raise NotFullyCorrelated("requires gamma1*gamma2 = gamma12^2")
    frame = rotation_frame(p, alpha1, alpha2)
    c, s = cos(frame.phi), sin(frame.phi)
    at1 = alpha1 * c * c - alpha2 * c * s
    at2 = alpha2 * s * s - alpha1 * c * s
    w = 1.0 / np.sqrt(2.0)
    cat = CatReference(
        components=((1j * w, (at1, at2)), (w, (-at1, -at2))),
        tag="correlated-asymptotic",
    )
    ratio = np.inf if frame.gamma_bar_2 == 0 else \
        2.0 * abs(p.chi) * abs(frame.alpha_bar_1) ** 2 / frame.gamma_bar_2
    return cat, AsymptoticCatReport(float(ratio))


def conditioned_cat(alpha1: complex, alpha2: complex, t: float,
                    p: KerrLossParams,
                    cutoff: FockCutoff) -> tuple[SingleModeDensity, float]:
    """Rotated mode b1 conditioned on vacuum at the b2 detector.

    rho1[k,l] ~ ab1^k ab1*^l / sqrt(k! l!)
                * exp(i chi t (k^2-l^2) - gamma_bar_1 t (k+l)/2 + f_kl)
    with f_kl = f(gb1, 2(k-l)) + f(gb2, 2(k-l)); the doubled detuning index
    comes from the symmetric Hamiltonian chi (n1+n2)^2 projected on the b2
    vacuum. Returns the normalized state and the success probability (the
    pre-normalization trace, analytically exp(-|ab2|^2 e^{-gb2 t})).
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    frame = rotation_frame(p, alpha1, alpha2)
    ab1, ab2 = frame.alpha_bar_1, frame.alpha_bar_2
    require_adequate(ab1, cutoff)

    d = cutoff.dim
    n = np.arange(d)
    c1 = coherent_vector(ab1, cutoff) * np.exp(0.5 * abs(ab1) ** 2)
    f = np.empty(2 * d - 1, complex)
    for j in range(-(d - 1), d):
        f[j + d - 1] = (
            f_function(frame.gamma_bar_1, 2 * j, p.chi, abs(ab1) ** 2, t)
            + f_function(frame.gamma_bar_2, 2 * j, p.chi, abs(ab2) ** 2, t)
        )
    diff = n[:, None] - n[None, :]
    mat = (c1[:, None] * c1.conj()[None, :]
           * np.exp(1j * p.chi * t * (n[:, None] ** 2 - n[None, :] ** 2)
                    - 0.5 * frame.gamma_bar_1 * t * (n[:, None] + n[None, :])
                    + f[diff + d - 1]))
    mat *= np.exp(-abs(ab1) ** 2 - abs(ab2) ** 2)
    prob = float(np.trace(mat).real)
    if prob <= 0:
        raise TruncationError("conditioned state lost all weight at cutoff")
    return SingleModeDensity(mat / prob, cutoff), prob


def _subspace_basis(g1: float, g2: float, cutoff: FockCutoff):
    """Orthonormal {psi_+, psi_-, vac} vectors in the 0/1-photon sector."""
    G = np.sqrt(g1 * g1 + g2 * g2)
    e10 = fock_two_mode(1, 0, cutoff)
    e01 = fock_two_mode(0, 1, cutoff)
    vac = fock_two_mode(0, 0, cutoff)
    psi_p = (g1 * e10 + g2 * e01) / G
    psi_m = (g2 * e10 - g1 * e01) / G
    return psi_p, psi_m, vac


def beamsplit_decoherence_evolve(g1: float, g2: float, delta_w: float,
                                 chi_c: float, gamma_bar: float, t: float,
                                 rho0: TwoModeDensity) -> TwoModeDensity:
    """Closed-form common-reservoir dynamics on the 0/1-photon subspace.

    In the {psi_+, psi_-, vac} basis: rho_-- and rho_-v are constant,
    rho_++ decays at 2 gamma_bar, the +- and +v coherences at
    gamma_bar + i(delta_w + chi_c); the lost psi_+ population feeds vacuum.
    psi_- is annihilated by the collective mode, so it is loss-free.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    basis = _subspace_basis(g1, g2, rho0.cutoff)
    R = rho0.matrix
    P = np.column_stack(basis)
    r3 = P.conj().T @ R @ P
    outside = float(abs(np.trace(R).real - np.trace(r3).real))
    if outside > 1e-12:
        raise SubspaceViolation(
            f"population {outside:.3e} outside the 0/1-photon subspace"
        )

    lam = gamma_bar + 1j * (delta_w + chi_c)
    out = np.empty_like(r3)
    decay2 = np.exp(-2.0 * gamma_bar * t)
    coh = np.exp(-lam * t)
    out[0, 0] = r3[0, 0] * decay2
    out[1, 1] = r3[1, 1]
    out[2, 2] = r3[2, 2] + r3[0, 0] * (1.0 - decay2)
    out[0, 1] = r3[0, 1] * coh
    out[1, 0] = np.conj(out[0, 1])
    out[0, 2] = r3[0, 2] * coh
    out[2, 0] = np.conj(out[0, 2])
    out[1, 2] = r3[1, 2]
    out[2, 1] = np.conj(out[1, 2])

    mat = P @ out @ P.conj().T
    return TwoModeDensity.from_matrix(mat, rho0.cutoff, rho0.normalized)


def negativity_trace(g1: float, g2: float, delta_w: float, chi_c: float,
                     gamma_bar: float, t_samples,
                     cutoff: FockCutoff = FockCutoff(1)):
    """Negativity of the beam-splitting-by-decoherence state vs time,
    starting from a single photon in mode 1."""
    from .observables import TimeSeries, negativity

    t_samples = np.asarray(t_samples, float)
    if t_samples.size == 0 or np.any(np.diff(t_samples) < 0):
        raise ValueError("t_samples must be non-empty and ascending")
    e10 = fock_two_mode(1, 0, cutoff)
    rho0 = TwoModeDensity.from_matrix(np.outer(e10, e10.conj()), cutoff)
    values = np.array([
        negativity(beamsplit_decoherence_evolve(
            g1, g2, delta_w, chi_c, gamma_bar, float(t), rho0))
        for t in t_samples
    ])
    return TimeSeries(t_samples, values)
