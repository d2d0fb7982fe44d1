"""Scratch: resolve paper sign conventions against a brute-force integrator."""
import numpy as np
from math import factorial, atan2

def destroy(d):
    return np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)

def coh_vec(alpha, d):
    n = np.arange(d)
    v = np.array([alpha**k / np.sqrt(factorial(k)) for k in n], complex)
    v *= np.exp(-abs(alpha)**2 / 2)
    return v

def rk4_lindblad(H, jumps, rho0, t, steps=4000):
    """jumps: list of (rate, op); drho = -i[H,rho] + sum rate/2 * L(op)."""
    rho = rho0.copy()
    dt = t / steps
    def rhs(r):
        out = -1j * (H @ r - r @ H)
        for rate, b in jumps:
            bd = b.conj().T
            bdb = bd @ b
            out += rate * (b @ r @ bd - 0.5 * (bdb @ r + r @ bdb))
        return out
    for _ in range(steps):
        k1 = rhs(rho); k2 = rhs(rho + 0.5*dt*k1); k3 = rhs(rho + 0.5*dt*k2); k4 = rhs(rho + dt*k3)
        rho = rho + dt/6*(k1 + 2*k2 + 2*k3 + k4)
        rho = 0.5*(rho + rho.conj().T)
    return rho

def f_func(rate, idx, chi, a2, t):
    z = 1j*chi*idx - rate
    if abs(z*t) < 1e-6:
        s = sum((z*t)**j / factorial(j+1) for j in range(6))
        return rate * t * s * a2
    return rate * (np.exp(z*t) - 1) / z * a2

def evolve_exact_tensor(a1, a2, t, chi, g1, g2, d1, d2, d):
    ks = np.arange(d)
    rho = np.zeros((d,d,d,d), complex)
    lf = np.array([np.sqrt(factorial(k)) for k in ks])
    for k in range(d):
        for l in range(d):
            for m in range(d):
                for n in range(d):
                    amp = a1**k * np.conj(a1)**l * a2**m * np.conj(a2)**n / (lf[k]*lf[l]*lf[m]*lf[n])
                    deph = np.exp(-0.5*(d1*(k-l)**2 + d2*(m-n)**2)*t)
                    f2 = f_func(g1, m-n, chi, abs(a1)**2, t)
                    f1 = f_func(g2, k-l, chi, abs(a2)**2, t)
                    ph = np.exp(1j*chi*t*(k*m - l*n) - 0.5*g1*t*(k+l) - 0.5*g2*t*(m+n) + f2 + f1)
                    rho[k,l,m,n] = amp * deph * ph
    rho *= np.exp(-abs(a1)**2 - abs(a2)**2)
    return rho

def tensor_to_mat(T):
    d = T.shape[0]
    return T.transpose(0,2,1,3).reshape(d*d, d*d)

d = 8
a = destroy(d)
I = np.eye(d, dtype=complex)
a1 = np.kron(a, I); a2 = np.kron(I, a)
n1 = a1.conj().T @ a1; n2 = a2.conj().T @ a2

# --- Check 1: Kerr sign. evolve_exact (paper phase +i chi t (km-ln)) vs oracle H = s*chi*n1n2
al1, al2 = 0.55, 0.35+0.2j
chi, g1, g2, t = 1.3, 0.4, 0.25, 0.7
rho0 = np.outer(coh_vec(al1, d), coh_vec(al1, d).conj())
rho0 = np.kron(rho0, np.outer(coh_vec(al2, d), coh_vec(al2, d).conj()))
exact = tensor_to_mat(evolve_exact_tensor(al1, al2, t, chi, g1, g2, 0, 0, d))
exact /= np.trace(exact).real
for s in (+1, -1):
    H = s * chi * (n1 @ n2)
    num = rk4_lindblad(H, [(g1, a1), (g2, a2)], rho0, t)
    print(f"Kerr sign s={s:+d}: max|exact-oracle| = {abs(exact-num).max():.3e}")

# --- Check 2: short-time amplitude phase sign (+i vs -i cross term)
al1 = al2 = 0.6; chi = 1.0; g1 = g2 = 0.05; t = 0.3
exact = tensor_to_mat(evolve_exact_tensor(al1, al2, t, chi, g1, g2, 0, 0, d))
exact /= np.trace(exact).real
for s in (+1, -1):
    a1t = al1 * np.exp(-g1*t/2 + s*0.5j*g2*chi*abs(al2)**2*t**2)
    a2t = al2 * np.exp(-g2*t/2 + s*0.5j*g1*chi*abs(al1)**2*t**2)
    # psi = sum_k c_k |k> x |a2t e^{i chi k t}>
    psi = np.zeros(d*d, complex)
    for k in range(d):
        ck = np.exp(-abs(a1t)**2/2) * a1t**k / np.sqrt(factorial(k))
        psi += ck * np.kron(np.eye(d)[k], coh_vec(a2t*np.exp(1j*chi*k*t), d))
    psi /= np.linalg.norm(psi)
    F = np.real(psi.conj() @ exact @ psi)
    print(f"short-time phase s={s:+d}: fidelity with exact = {1-F:.3e} (1-F)")

# --- Check 3: conditioned-cat f index factor (2 vs 1), symmetric H ~ (n1+n2)^2
# b-frame: diagonal rates gb1, gb2; H gives ket phase e^{+i chi t (N)^2} -> oracle H = -chi (n1+n2)^2
chi = 1.0; gb1, gb2 = 0.6, 1.4; ab1, ab2 = 0.7, 0.45; t = 0.8
Hm = -chi * (n1 + n2) @ (n1 + n2)
rho0 = np.kron(np.outer(coh_vec(ab1, d), coh_vec(ab1, d).conj()),
               np.outer(coh_vec(ab2, d), coh_vec(ab2, d).conj()))
num = rk4_lindblad(Hm, [(gb1, a1), (gb2, a2)], rho0, t, steps=8000)
# project mode 2 on vacuum: sigma[k,l] = rho[(k,0),(l,0)]
T = num.reshape(d,d,d,d).transpose(0,2,1,3)  # [k,l,m,n]
sig_oracle = T[:,:,0,0]
p_oracle = np.trace(sig_oracle).real
for fac in (2, 1):
    sig = np.zeros((d,d), complex)
    for k in range(d):
        for l in range(d):
            F = f_func(gb1, fac*(k-l), chi, abs(ab1)**2, t) + f_func(gb2, fac*(k-l), chi, abs(ab2)**2, t)
            sig[k,l] = (ab1**k * np.conj(ab1)**l / np.sqrt(factorial(k)*factorial(l))
                        * np.exp(1j*chi*t*(k**2-l**2) - 0.5*gb1*t*(k+l) + F))
    sig *= np.exp(-abs(ab1)**2 - abs(ab2)**2)
    print(f"conditioned f-index factor {fac}: max|closed-oracle| = {abs(sig-sig_oracle).max():.3e}, "
          f"p_closed = {np.trace(sig).real:.6f} vs p_oracle = {p_oracle:.6f}")
print("success prob formula:", np.exp(-abs(ab2)**2 * np.exp(-gb2*t)))

# --- Check 4: full two-mode symmetric-H solution phase (k+m)^2-(l+n)^2 with P_j = 2chi[(k-l)+(m-n)]
lf = np.array([np.sqrt(factorial(k)) for k in range(d)])
T_closed = np.zeros((d,d,d,d), complex)
for k in range(d):
    for l in range(d):
        for m in range(d):
            for n in range(d):
                amp = ab1**k*np.conj(ab1)**l*ab2**m*np.conj(ab2)**n/(lf[k]*lf[l]*lf[m]*lf[n])
                P = 2*chi*((k-l)+(m-n))
                F1 = f_func(gb1, P/chi, chi, abs(ab1)**2, t)
                F2 = f_func(gb2, P/chi, chi, abs(ab2)**2, t)
                ph = np.exp(1j*chi*t*((k+m)**2-(l+n)**2) - 0.5*gb1*t*(k+l) - 0.5*gb2*t*(m+n) + F1 + F2)
                T_closed[k,l,m,n] = amp*ph
T_closed *= np.exp(-abs(ab1)**2 - abs(ab2)**2)
print("full symmetric-H closed vs oracle:", abs(tensor_to_mat(T_closed) - num).max())
