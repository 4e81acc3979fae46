"""Open staggered XXZ layer: R-matrix, gauge matrix, reflection matrices,
monodromies and the double-row transfer matrix.

All operators act on spin-1/2 "primed" sites.  The transfer matrix places the
2-dimensional auxiliary space as the leftmost tensor factor and traces it out
by index summation.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .linalg import ID2, SWAP2, DIMENSION_CAP, DimensionError, embed, frobenius, kron, ptrace_first
from .params import ModelParams


def r_tilde(u: complex, eta: float) -> np.ndarray:
    """Trigonometric 4x4 R-matrix on two spin-1/2 spaces (first factor = left index)."""
    sh = cmath.sinh
    d = sh(-u / 2 + eta)
    m = sh(u / 2)
    return np.array(
        [[d, 0, 0, 0],
         [0, m, cmath.exp(-u / 2) * sh(eta), 0],
         [0, cmath.exp(u / 2) * sh(eta), m, 0],
         [0, 0, 0, d]], dtype=complex)


def rho_s(u: complex, eta: float) -> complex:
    """Unitarity scalar: r(u) r_swapped(-u) = rho_s(u) * Id."""
    return cmath.sinh(-u / 2 + eta) * cmath.sinh(u / 2 + eta)


def swapped(r4: np.ndarray) -> np.ndarray:
    """Exchange the two spin-1/2 factors: R_{21} from R_{12}."""
    return SWAP2 @ r4 @ SWAP2


def s_matrix(eta: float) -> np.ndarray:
    """Involutive gauge matrix S = S^{-1} mixing the middle spin sector."""
    c = math.cosh(eta / 2) / math.sqrt(math.cosh(eta))
    s = math.sinh(eta / 2) / math.sqrt(math.cosh(eta))
    return np.array(
        [[1, 0, 0, 0],
         [0, c, -s, 0],
         [0, -s, -c, 0],
         [0, 0, 0, 1]], dtype=complex)


def m_tilde(eta: float) -> np.ndarray:
    """Crossing gauge diag(e^eta, e^-eta)."""
    return np.diag([math.exp(eta), math.exp(-eta)]).astype(complex)


def k_minus(u: complex, triple: tuple[complex, complex, complex]) -> np.ndarray:
    """Generic non-diagonal 2x2 reflection matrix for the right-moving boundary."""
    s, s1, s2 = triple
    sh = cmath.sinh
    return np.array(
        [[-cmath.exp(-u / 2) * sh(u / 2 - s), s1 * sh(u)],
         [s2 * sh(u), cmath.exp(u / 2) * sh(u / 2 + s)]], dtype=complex)


def k_plus(u: complex, triple: tuple[complex, complex, complex], eta: float) -> np.ndarray:
    """Dual reflection matrix: M * K^-(-u + 2 eta) with the primed triple."""
    return m_tilde(eta) @ k_minus(-u + 2 * eta, triple)


# ---------------------------------------------------------------------------
# identity residuals (all relative Frobenius)


def _rel(resid: np.ndarray, scale: np.ndarray) -> float:
    denom = frobenius(scale)
    return frobenius(resid) / denom if denom > 0 else frobenius(resid)


def qybe_residual(u: complex, v: complex, eta: float) -> float:
    """R12(u-v) R13(u) R23(v) = R23(v) R13(u) R12(u-v) on three sites."""
    r12 = embed(r_tilde(u - v, eta), (0, 1), 3)
    r13 = embed(r_tilde(u, eta), (0, 2), 3)
    r23 = embed(r_tilde(v, eta), (1, 2), 3)
    lhs = r12 @ r13 @ r23
    rhs = r23 @ r13 @ r12
    return _rel(lhs - rhs, lhs)


def initial_condition_residual(eta: float) -> float:
    """r(0) = sinh(eta) * P."""
    lhs = r_tilde(0.0, eta)
    rhs = math.sinh(eta) * SWAP2
    return _rel(lhs - rhs, rhs)


def quasi_period_residual(u: complex, eta: float) -> float:
    """r(u + 2 i pi) = -r(u)."""
    lhs = r_tilde(u + 2j * math.pi, eta)
    rhs = -r_tilde(u, eta)
    return _rel(lhs - rhs, rhs)


def pt_symmetry_residual(u: complex, eta: float) -> float:
    """R21(u) equals the double transpose of R12(u)."""
    lhs = swapped(r_tilde(u, eta))
    rhs = r_tilde(u, eta).T
    return _rel(lhs - rhs, rhs)


def unitarity_residual(u: complex, eta: float) -> float:
    """R12(u) R21(-u) = rho_s(u) * Id."""
    lhs = r_tilde(u, eta) @ swapped(r_tilde(-u, eta))
    rhs = rho_s(u, eta) * np.eye(4)
    return _rel(lhs - rhs, rhs)


def crossing_residual(u: complex, eta: float) -> float:
    """Crossing unitarity with gauge M: the transposed-product form equals
    rho_s(u - eta)... hold for the scalar-times-identity convention.
    """
    m1 = kron(m_tilde(eta), ID2)
    r12 = r_tilde(u, eta)
    r21c = swapped(r_tilde(-u + 2 * eta, eta))
    lhs = _partial_transpose_first(r12) @ m1 @ _partial_transpose_first(r21c) @ np.linalg.inv(m1)
    rhs = rho_s(u - eta, eta) * np.eye(4)
    return _rel(lhs - rhs, rhs)


def _partial_transpose_first(r4: np.ndarray) -> np.ndarray:
    """Transpose in the first spin-1/2 factor only."""
    t = r4.reshape(2, 2, 2, 2)
    return t.transpose(2, 1, 0, 3).reshape(4, 4)


def reflection_residual(u: complex, v: complex, eta: float,
                        triple: tuple[complex, complex, complex]) -> float:
    """Boundary Yang-Baxter (reflection) equation for K^-."""
    r_uv = r_tilde(u - v, eta)
    r21 = swapped(r_tilde(u + v, eta))
    k1 = kron(k_minus(u, triple), ID2)
    k2 = kron(ID2, k_minus(v, triple))
    lhs = r_uv @ k1 @ r21 @ k2
    rhs = k2 @ r21 @ k1 @ r_uv
    return _rel(lhs - rhs, lhs)


def dual_reflection_residual(u: complex, v: complex, eta: float,
                             triple: tuple[complex, complex, complex]) -> float:
    """Dual reflection equation for K^+ with the M-gauge insertions."""
    m1 = kron(m_tilde(eta), ID2)
    m1i = np.linalg.inv(m1)
    r_vu = r_tilde(v - u, eta)
    r21 = swapped(r_tilde(-u - v + 4 * eta, eta))
    k1 = kron(k_plus(u, triple, eta), ID2)
    k2 = kron(ID2, k_plus(v, triple, eta))
    lhs = r_vu @ k1 @ m1i @ r21 @ m1 @ k2
    rhs = k2 @ m1 @ r21 @ m1i @ k1 @ r_vu
    return _rel(lhs - rhs, lhs)


# ---------------------------------------------------------------------------
# monodromies and the double-row transfer matrix


def _check_chain_dim(n_sites: int) -> None:
    if 2**n_sites > DIMENSION_CAP:
        raise DimensionError(f"chain dimension 2^{n_sites} exceeds cap {DIMENSION_CAP}")


def monodromy(u: complex, theta: np.ndarray, eta: float) -> np.ndarray:
    """T_0(u) = R_{0,1}(u-theta_1) ... R_{0,2N}(u-theta_2N) on aux+chain."""
    n_sites = len(theta) + 1
    _check_chain_dim(n_sites)
    out = np.eye(2**n_sites, dtype=complex)
    for j, th in enumerate(theta):
        out = out @ embed(r_tilde(u - th, eta), (0, j + 1), n_sites)
    return out


def monodromy_hat(u: complex, theta: np.ndarray, eta: float) -> np.ndarray:
    """That_0(u) = R_{0,2N}(u+theta_2N) ... R_{0,1}(u+theta_1) on aux+chain."""
    n_sites = len(theta) + 1
    _check_chain_dim(n_sites)
    out = np.eye(2**n_sites, dtype=complex)
    for j in range(len(theta) - 1, -1, -1):
        out = out @ embed(r_tilde(u + theta[j], eta), (0, j + 1), n_sites)
    return out


def transfer_tilde(u: complex, p: ModelParams) -> np.ndarray:
    """Double-row transfer matrix t(u) = tr_0 { K+_0(u) T_0(u) K-_0(u) That_0(u) }."""
    nq = 2 * p.n
    _check_chain_dim(nq + 1)
    dim_q = 2**nq
    kp = kron(k_plus(u, p.right_triple, p.eta), np.eye(dim_q, dtype=complex))
    km = kron(k_minus(u, p.left_triple), np.eye(dim_q, dtype=complex))
    t_full = kp @ monodromy(u, p.theta, p.eta) @ km @ monodromy_hat(u, p.theta, p.eta)
    return ptrace_first(t_full, 2)


def staggered_transfer(u: complex, p: ModelParams) -> np.ndarray:
    """transfer_tilde with the staggered inhomogeneity pattern enforced."""
    tb = p.theta.copy()
    tb[1::2] -= 1j * math.pi
    if np.max(np.abs(tb.real)) > 1e-12:
        raise ValueError("staggered transfer requires theta = i*tb (+ i*pi on even sites), tb real")
    return transfer_tilde(u, p)


def transfer_value_at_zero(p: ModelParams) -> complex:
    """Scalar t(0) = t(2 eta) = 2 cosh(eta) sinh(s) sinh(s') prod_j rho_s(theta_j)."""
    prod = np.prod([rho_s(th, p.eta) for th in p.theta])
    return 2 * math.cosh(p.eta) * cmath.sinh(p.s) * cmath.sinh(p.sp) * prod


def transfer_value_at_ipi(p: ModelParams) -> complex:
    """Scalar t(i pi) = 2 cosh(eta) cosh(s) cosh(s') prod_j rho_s(theta_j + i pi)."""
    prod = np.prod([rho_s(th + 1j * math.pi, p.eta) for th in p.theta])
    return 2 * math.cosh(p.eta) * cmath.cosh(p.s) * cmath.cosh(p.sp) * prod
