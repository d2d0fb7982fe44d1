"""Phase-space and information observables.

Conventions (fixed for all outputs and regression tests):
  * Wigner: parity form W(a) = (2/pi) sum_n (-1)^n <n|D(-a) rho D(a)|n>,
    normalized so the integral over the complex plane is 1 and the vacuum
    peaks at 2/pi.
  * Quadrature: x = (a + a^dag)/sqrt(2), vacuum variance 1/2, so the vacuum
    x-density is exp(-x^2)/sqrt(pi).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import GridCoverageError
from .fock import FockCutoff, SingleModeDensity, TwoModeDensity


@dataclass(frozen=True)
class PhaseSpaceGrid:
    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int
    n_im: int

    def __post_init__(self):
        if not (self.re_max > self.re_min and self.im_max > self.im_min):
            raise ValueError("grid extents must be increasing")
        if self.n_re < 2 or self.n_im < 2:
            raise ValueError("need at least 2 points per axis")

    @property
    def re_axis(self) -> np.ndarray:
        return np.linspace(self.re_min, self.re_max, self.n_re)

    @property
    def im_axis(self) -> np.ndarray:
        return np.linspace(self.im_min, self.im_max, self.n_im)

    @property
    def cell_area(self) -> float:
        dre = (self.re_max - self.re_min) / (self.n_re - 1)
        dim = (self.im_max - self.im_min) / (self.n_im - 1)
        return dre * dim

    def points(self) -> tuple[np.ndarray, np.ndarray]:
        """Flattened (re, im) coordinates, row-major over the re axis."""
        R, I = np.meshgrid(self.re_axis, self.im_axis, indexing="ij")
        return R.ravel(), I.ravel()


@dataclass(frozen=True)
class ScalarField:
    grid: PhaseSpaceGrid
    values: np.ndarray  # shape (n_re, n_im)

    def __post_init__(self):
        if self.values.shape != (self.grid.n_re, self.grid.n_im):
            raise ValueError("field shape does not match grid")

    def riemann_sum(self) -> float:
        return float(self.values.sum() * self.grid.cell_area)

    def min_location(self) -> tuple[float, complex]:
        idx = np.unravel_index(np.argmin(self.values), self.values.shape)
        loc = complex(self.grid.re_axis[idx[0]], self.grid.im_axis[idx[1]])
        return float(self.values[idx]), loc


@dataclass(frozen=True)
class TimeSeries:
    t: np.ndarray
    values: np.ndarray


def wigner(rho: SingleModeDensity, grid: PhaseSpaceGrid) -> ScalarField:
    re, im = grid.points()
    vals = _kernels.wigner_grid(rho.matrix, re, im)
    return ScalarField(grid, vals.reshape(grid.n_re, grid.n_im))


def q_function(rho: SingleModeDensity, grid: PhaseSpaceGrid) -> ScalarField:
    re, im = grid.points()
    vals = _kernels.q_grid(rho.matrix, re, im)
    return ScalarField(grid, vals.reshape(grid.n_re, grid.n_im))


def bs_half_loss_wigner(rho_in: SingleModeDensity,
                        grid: PhaseSpaceGrid) -> ScalarField:
    """Wigner function after 50% propagation loss: W_out(a) = 2 Q_in(sqrt2 a).

    Non-negative by construction, which is the statement that Wigner
    negativity cannot survive a balanced beam splitter.
    """
    re, im = grid.points()
    s = np.sqrt(2.0)
    vals = 2.0 * _kernels.q_grid(rho_in.matrix, s * re, s * im)
    return ScalarField(grid, vals.reshape(grid.n_re, grid.n_im))


def _hermite_functions(x: float, n_max: int) -> np.ndarray:
    """Normalized Hermite functions phi_n(x) = H_n(x) e^{-x^2/2}/sqrt(2^n n! sqrt(pi)).

    Three-term recurrence on the normalized functions; no overflow at
    moderate n.
    """
    phi = np.empty(n_max + 1)
    phi[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n_max >= 1:
        phi[1] = np.sqrt(2.0) * x * phi[0]
    for n in range(1, n_max):
        phi[n + 1] = (np.sqrt(2.0 / (n + 1)) * x * phi[n]
                      - np.sqrt(n / (n + 1.0)) * phi[n - 1])
    return phi


def project_quadrature(rho: TwoModeDensity, mode: int,
                       x: float) -> tuple[SingleModeDensity, float]:
    """Project one mode onto the x-quadrature eigenfunction.

    Returns the unnormalized reduced matrix on the other mode and the
    measurement probability density <x| tr_other rho |x>.
    """
    phi = _hermite_functions(x, rho.cutoff.n_max)
    if mode == 2:
        mat = np.einsum("klmn,m,n->kl", rho.tensor, phi, phi)
    elif mode == 1:
        mat = np.einsum("klmn,k,l->mn", rho.tensor, phi, phi)
    else:
        raise ValueError("mode must be 1 or 2")
    density = float(np.trace(mat).real)
    return SingleModeDensity(np.ascontiguousarray(mat), rho.cutoff,
                             normalized=False), density


def negativity(rho: TwoModeDensity) -> float:
    """Entanglement negativity N = (Tr sqrt(sigma sigma^dag) - 1)/2 from the
    partial transpose sigma on mode 1."""
    sigma_t = rho.tensor.transpose(1, 0, 2, 3)
    d = rho.cutoff.dim
    sigma = sigma_t.transpose(0, 2, 1, 3).reshape(d * d, d * d)
    defect = np.abs(sigma - sigma.conj().T).max()
    if defect > 1e-10:
        raise ValueError(f"partial transpose not Hermitian (defect {defect:.3e})")
    eigs = np.linalg.eigvalsh(0.5 * (sigma + sigma.conj().T))
    return float(0.5 * (np.abs(eigs).sum() - eigs.sum()))


@dataclass(frozen=True)
class MinWignerResult:
    value: float
    location: complex


def min_wigner(rho: SingleModeDensity, grid: PhaseSpaceGrid,
               coverage_tol: float = 1e-3) -> MinWignerResult:
    """Minimum Wigner value over the grid, refined once on a 4x finer
    local sub-grid around the coarse minimum."""
    field = wigner(rho, grid)
    defect = abs(field.riemann_sum() - 1.0)
    if defect >= coverage_tol:
        raise GridCoverageError(
            f"Wigner normalization defect {defect:.3e} >= {coverage_tol:g}"
        )
    coarse_val, loc = field.min_location()
    dre = (grid.re_max - grid.re_min) / (grid.n_re - 1)
    dim = (grid.im_max - grid.im_min) / (grid.n_im - 1)
    re_fine = np.linspace(loc.real - dre, loc.real + dre, 9)
    im_fine = np.linspace(loc.imag - dim, loc.imag + dim, 9)
    R, I = np.meshgrid(re_fine, im_fine, indexing="ij")
    vals = _kernels.wigner_grid(rho.matrix, R.ravel(), I.ravel())
    k = int(np.argmin(vals))
    if vals[k] < coarse_val:
        return MinWignerResult(float(vals[k]),
                               complex(R.ravel()[k], I.ravel()[k]))
    return MinWignerResult(coarse_val, loc)
