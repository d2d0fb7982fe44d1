"""Hot numeric kernels: numba-jitted versions with pure-numpy fallbacks.

Backend selection is controlled by the ``KERRLOSS_BACKEND`` environment
variable: ``auto`` (default, numba if importable), ``numba``, or ``numpy``.
``KERRLOSS_THREADS`` caps the numba thread pool (0 or unset = automatic).
Both paths produce identical results up to floating-point evaluation order;
within one element the summation order is fixed, so repeated runs on one
backend are bit-identical.
"""

import os

import numpy as np

_env = os.environ.get("KERRLOSS_BACKEND", "auto").strip().lower()
if _env not in ("auto", "numba", "numpy"):
    raise ValueError(f"KERRLOSS_BACKEND must be auto|numba|numpy, got {_env!r}")

_numba = None
if _env in ("auto", "numba"):
    try:
        import numba as _numba
    except ImportError:
        if _env == "numba":
            raise
        _numba = None

if _numba is not None:
    _threads = os.environ.get("KERRLOSS_THREADS", "0").strip()
    try:
        _nt = int(_threads)
    except ValueError:
        _nt = 0
    if _nt > 0:
        _numba.set_num_threads(min(_nt, _numba.config.NUMBA_NUM_THREADS))


def backend() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return "numpy" if _numba is None else "numba"


# ---------------------------------------------------------------------------
# numpy reference implementations
# ---------------------------------------------------------------------------

def _coherent_rows_np(alpha, d):
    """Rows of truncated coherent coefficients e^{-|a|^2/2} a^n/sqrt(n!)."""
    G = alpha.size
    V = np.empty((G, d), np.complex128)
    V[:, 0] = np.exp(-0.5 * np.abs(alpha) ** 2)
    for n in range(1, d):
        V[:, n] = V[:, n - 1] * alpha / np.sqrt(n)
    return V


def wigner_grid_np(rho, a_re, a_im):
    """W(alpha) = (2/pi) Tr[rho D(2 alpha) Pi] over grid points.

    Columns of the displacement operator are built by the coherent-shift
    recurrence v_{n+1} = (a^dag - beta*) v_n / sqrt(n+1), whose truncated
    components are exact (entry m depends only on entries <= m), and
    contracted against rho with the alternating parity sign. The result is
    the exact Wigner function of the truncated density matrix.
    """
    d = rho.shape[0]
    beta = 2.0 * (a_re + 1j * a_im)
    bc = np.conj(beta)
    V = _coherent_rows_np(beta, d)
    sq = np.sqrt(np.arange(d))
    acc = np.zeros(beta.size)
    sign = 1.0
    for n in range(d):
        acc += sign * (V @ rho[n, :]).real
        sign = -sign
        if n + 1 < d:
            W = np.empty_like(V)
            W[:, 0] = -bc * V[:, 0]
            W[:, 1:] = sq[1:] * V[:, :-1] - bc[:, None] * V[:, 1:]
            V = W / np.sqrt(n + 1.0)
    return acc * (2.0 / np.pi)


def q_grid_np(rho, a_re, a_im):
    """Q(alpha) = <alpha|rho|alpha>/pi over grid points."""
    d = rho.shape[0]
    C = _coherent_rows_np(a_re + 1j * a_im, d)
    return np.einsum("gi,ij,gj->g", np.conj(C), rho, C).real / np.pi


def kerr_product_tensor_np(A1, A2, U):
    """T[k,l,m,n] = A1[k,l] A2[m,n] U[k,m] conj(U[l,n])."""
    return np.einsum("kl,mn,km,ln->klmn", A1, A2, U, np.conj(U))


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------

if _numba is not None:
    from numba import njit, prange

    @njit(cache=True, parallel=True)
    def _wigner_grid_nb(rho, a_re, a_im):
        d = rho.shape[0]
        G = a_re.size
        out = np.empty(G)
        for g in prange(G):
            beta = 2.0 * complex(a_re[g], a_im[g])
            bc = beta.conjugate()
            v = np.empty(d, np.complex128)
            v[0] = np.exp(-0.5 * abs(beta) ** 2)
            for m in range(1, d):
                v[m] = v[m - 1] * beta / np.sqrt(m)
            acc = 0.0
            sign = 1.0
            for n in range(d):
                s = 0.0 + 0.0j
                for m in range(d):
                    s += rho[n, m] * v[m]
                acc += sign * s.real
                sign = -sign
                if n + 1 < d:
                    w = np.empty(d, np.complex128)
                    w[0] = -bc * v[0]
                    for m in range(1, d):
                        w[m] = np.sqrt(m) * v[m - 1] - bc * v[m]
                    r = 1.0 / np.sqrt(n + 1.0)
                    for m in range(d):
                        v[m] = w[m] * r
            out[g] = acc * (2.0 / np.pi)
        return out

    @njit(cache=True, parallel=True)
    def _q_grid_nb(rho, a_re, a_im):
        d = rho.shape[0]
        G = a_re.size
        out = np.empty(G)
        for g in prange(G):
            alpha = complex(a_re[g], a_im[g])
            c = np.empty(d, np.complex128)
            c[0] = np.exp(-0.5 * abs(alpha) ** 2)
            for n in range(1, d):
                c[n] = c[n - 1] * alpha / np.sqrt(n)
            val = 0.0
            for i in range(d):
                s = 0.0 + 0.0j
                for j in range(d):
                    s += rho[i, j] * c[j]
                val += (c[i].conjugate() * s).real
            out[g] = val / np.pi
        return out

    @njit(cache=True, parallel=True)
    def _kerr_product_tensor_nb(A1, A2, U):
        d = A1.shape[0]
        T = np.empty((d, d, d, d), np.complex128)
        for k in prange(d):
            for l in range(d):
                a = A1[k, l]
                for m in range(d):
                    um = U[k, m]
                    for n in range(d):
                        T[k, l, m, n] = a * A2[m, n] * um * np.conj(U[l, n])
        return T


def wigner_grid(rho, a_re, a_im):
    rho = np.ascontiguousarray(rho, np.complex128)
    a_re = np.ascontiguousarray(a_re, np.float64)
    a_im = np.ascontiguousarray(a_im, np.float64)
    if _numba is not None:
        return _wigner_grid_nb(rho, a_re, a_im)
    return wigner_grid_np(rho, a_re, a_im)


def q_grid(rho, a_re, a_im):
    rho = np.ascontiguousarray(rho, np.complex128)
    a_re = np.ascontiguousarray(a_re, np.float64)
    a_im = np.ascontiguousarray(a_im, np.float64)
    if _numba is not None:
        return _q_grid_nb(rho, a_re, a_im)
    return q_grid_np(rho, a_re, a_im)


def kerr_product_tensor(A1, A2, U):
    A1 = np.ascontiguousarray(A1, np.complex128)
    A2 = np.ascontiguousarray(A2, np.complex128)
    U = np.ascontiguousarray(U, np.complex128)
    if _numba is not None:
        return _kerr_product_tensor_nb(A1, A2, U)
    return kerr_product_tensor_np(A1, A2, U)
