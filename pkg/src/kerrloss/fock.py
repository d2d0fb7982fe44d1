"""Truncated two-mode Fock-space algebra.

States are dense complex arrays over a shared cutoff. A single-mode density
matrix is indexed ``rho[m, n]``; the two-mode density is the rank-4 tensor
``rho[k, l, m, n]`` with (k, l) the first-mode row/column indices and
(m, n) the second-mode ones, i.e. ``rho[k, l, m, n] = <k, m| rho |l, n>``.
All values are treated as immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lgamma

import numpy as np

from .errors import DimensionMismatch, TruncationError

#: Coherent amplitudes are plain complex numbers throughout the package.
CoherentAmplitude = complex


@dataclass(frozen=True)
class FockCutoff:
    """Per-mode truncation; the Hilbert-space dimension is n_max + 1."""

    n_max: int

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")

    @property
    def dim(self) -> int:
        return self.n_max + 1


@dataclass(frozen=True)
class SingleModeDensity:
    matrix: np.ndarray
    cutoff: FockCutoff
    normalized: bool = True

    def __post_init__(self):
        if self.matrix.shape != (self.cutoff.dim, self.cutoff.dim):
            raise DimensionMismatch("matrix shape does not match cutoff")


@dataclass(frozen=True)
class TwoModeDensity:
    tensor: np.ndarray
    cutoff: FockCutoff
    normalized: bool = True

    def __post_init__(self):
        d = self.cutoff.dim
        if self.tensor.shape != (d, d, d, d):
            raise DimensionMismatch("tensor shape does not match cutoff")

    @property
    def matrix(self) -> np.ndarray:
        """Flattened d^2 x d^2 matrix with row (k, m), column (l, n)."""
        d = self.cutoff.dim
        return self.tensor.transpose(0, 2, 1, 3).reshape(d * d, d * d)

    @classmethod
    def from_matrix(cls, mat: np.ndarray, cutoff: FockCutoff,
                    normalized: bool = True) -> "TwoModeDensity":
        d = cutoff.dim
        if mat.shape != (d * d, d * d):
            raise DimensionMismatch("matrix shape does not match cutoff")
        tensor = mat.reshape(d, d, d, d).transpose(0, 2, 1, 3)
        return cls(np.ascontiguousarray(tensor), cutoff, normalized)


@dataclass(frozen=True)
class Diagnostics:
    """Hygiene report from :func:`validate`; reporting only, never raises."""

    hermiticity_defect: float
    trace_defect: float
    min_eigenvalue: float


def truncation_adequate(alpha: complex, cutoff: FockCutoff) -> bool:
    """Poisson-tail adequacy rule |a|^2 + 6|a| + 4 <= n_max.

    Keeps the neglected tail below ~1e-8 for |a| <= 3. Exact zero is always
    representable, so it bypasses the rule.
    """
    a = abs(alpha)
    if a == 0.0:
        return True
    return a * a + 6.0 * a + 4.0 <= cutoff.n_max


def require_adequate(alpha: complex, cutoff: FockCutoff) -> None:
    if not truncation_adequate(alpha, cutoff):
        raise TruncationError(
            f"|alpha|={abs(alpha):.4g} needs n_max >= "
            f"{abs(alpha)**2 + 6*abs(alpha) + 4:.1f}, got {cutoff.n_max}"
        )


def coherent_vector(alpha: complex, cutoff: FockCutoff) -> np.ndarray:
    """Truncated coherent coefficients e^{-|a|^2/2} a^n / sqrt(n!)."""
    n = np.arange(cutoff.dim)
    lognorm = np.array([0.5 * lgamma(k + 1.0) for k in range(cutoff.dim)])
    if alpha == 0:
        v = np.zeros(cutoff.dim, complex)
        v[0] = 1.0
        return v
    # log-space magnitude avoids overflow for large n while phases multiply
    mag = np.exp(n * np.log(abs(alpha)) - lognorm - 0.5 * abs(alpha) ** 2)
    phase = (alpha / abs(alpha)) ** n
    return mag * phase


def coherent_density(alpha: complex, cutoff: FockCutoff) -> SingleModeDensity:
    """Truncated coherent-state projector, renormalized to unit trace."""
    require_adequate(alpha, cutoff)
    v = coherent_vector(alpha, cutoff)
    rho = np.outer(v, v.conj())
    rho /= np.trace(rho).real
    return SingleModeDensity(rho, cutoff)


def tensor_product(rho1: SingleModeDensity, rho2: SingleModeDensity) -> TwoModeDensity:
    if rho1.cutoff != rho2.cutoff:
        raise DimensionMismatch("cutoffs differ")
    tensor = np.einsum("kl,mn->klmn", rho1.matrix, rho2.matrix)
    return TwoModeDensity(tensor, rho1.cutoff,
                          rho1.normalized and rho2.normalized)


def partial_trace(rho: TwoModeDensity, keep: int) -> SingleModeDensity:
    """Reduced state of mode ``keep`` (1 or 2); preserves the trace."""
    if keep == 1:
        mat = np.einsum("klmm->kl", rho.tensor)
    elif keep == 2:
        mat = np.einsum("kkmn->mn", rho.tensor)
    else:
        raise ValueError("keep must be 1 or 2")
    return SingleModeDensity(np.ascontiguousarray(mat), rho.cutoff, rho.normalized)


def purity(rho: SingleModeDensity | TwoModeDensity) -> float:
    """Tr(rho^2)."""
    mat = rho.matrix if isinstance(rho, TwoModeDensity) else rho.matrix
    return float(np.einsum("ab,ba->", mat, mat).real)


def validate(rho: SingleModeDensity | TwoModeDensity) -> Diagnostics:
    """Report Hermiticity, trace and positivity defects without mutating."""
    mat = rho.matrix
    herm = float(np.abs(mat - mat.conj().T).max())
    trace = float(abs(np.trace(mat).real - 1.0)) if rho.normalized else \
        float(abs(np.trace(mat).imag))
    eigs = np.linalg.eigvalsh(0.5 * (mat + mat.conj().T))
    return Diagnostics(herm, trace, float(eigs.min()))


# ---------------------------------------------------------------------------
# mode operators
# ---------------------------------------------------------------------------

def destroy_op(cutoff: FockCutoff) -> np.ndarray:
    """Single-mode annihilation operator on the truncated space."""
    return np.diag(np.sqrt(np.arange(1, cutoff.dim, dtype=float)), 1).astype(complex)


def number_op(cutoff: FockCutoff) -> np.ndarray:
    return np.diag(np.arange(cutoff.dim, dtype=float)).astype(complex)


def mode_op(op: np.ndarray, mode: int, cutoff: FockCutoff) -> np.ndarray:
    """Embed a single-mode operator into the two-mode space (d^2 x d^2)."""
    eye = np.eye(cutoff.dim, dtype=complex)
    if mode == 1:
        return np.kron(op, eye)
    if mode == 2:
        return np.kron(eye, op)
    raise ValueError("mode must be 1 or 2")


def fock_two_mode(k: int, m: int, cutoff: FockCutoff) -> np.ndarray:
    """Basis vector |k, m> in the flattened two-mode space."""
    d = cutoff.dim
    v = np.zeros(d * d, complex)
    v[k * d + m] = 1.0
    return v


def expectation(op: np.ndarray, rho: TwoModeDensity) -> complex:
    return complex(np.trace(op @ rho.matrix))
