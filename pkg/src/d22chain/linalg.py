"""Dense complex linear algebra for small spin-1/2 chains.

Everything is desk-scale by design: operators are dense complex128 matrices,
chains are short enough that 2^L fits comfortably in memory, and all residuals
are reported in the Frobenius norm.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

# Largest allowed matrix dimension per axis (2^16).  Guards against building
# chain operators far beyond the intended exact-diagonalization scale.
DIMENSION_CAP = 1 << 16

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
SIGMA_PLUS = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)   # (sx + i sy)/2
SIGMA_MINUS = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)  # (sx - i sy)/2
ID2 = np.eye(2, dtype=complex)

# Swap of two spin-1/2 factors.
SWAP2 = np.array(
    [[1, 0, 0, 0],
     [0, 0, 1, 0],
     [0, 1, 0, 0],
     [0, 0, 0, 1]], dtype=complex)


class DimensionError(ValueError):
    """Requested operator would exceed the dense-matrix dimension cap."""


class EigenSolverError(RuntimeError):
    """Dense eigensolver failed to converge or violated its residual bound."""


def frobenius(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def kron(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of one or more matrices, left factor outermost."""
    out = np.asarray(ops[0], dtype=complex)
    for op in ops[1:]:
        if out.shape[0] * op.shape[0] > DIMENSION_CAP:
            raise DimensionError(
                f"kron result dimension {out.shape[0] * op.shape[0]} exceeds cap {DIMENSION_CAP}")
        out = np.kron(out, np.asarray(op, dtype=complex))
    return out


def embed(op: np.ndarray, sites: Sequence[int], n_sites: int) -> np.ndarray:
    """Embed `op` into a chain of `n_sites` spin-1/2 sites (0-based indices).

    `op` acts on the len(sites) listed sites *in the listed order*; all other
    sites carry the identity.  Non-adjacent and permuted site orders are
    handled by relabeling basis states, not by similarity transforms.
    """
    sites = list(sites)
    k = len(sites)
    if len(set(sites)) != k:
        raise ValueError(f"target sites must be distinct, got {sites}")
    if any(s < 0 or s >= n_sites for s in sites):
        raise ValueError(f"site index out of range for chain of {n_sites}: {sites}")
    op = np.asarray(op, dtype=complex)
    if op.shape != (2**k, 2**k):
        raise ValueError(f"operator shape {op.shape} does not match {k} target sites")
    dim = 2**n_sites
    if dim > DIMENSION_CAP:
        raise DimensionError(f"chain dimension 2^{n_sites} exceeds cap {DIMENSION_CAP}")

    big = kron(op, np.eye(2**(n_sites - k), dtype=complex))
    # `big` leg q (MSB-first) carries chain site order[q]; relabel basis states
    # so that chain site s sits at leg s.
    order = sites + [q for q in range(n_sites) if q not in sites]
    idx = np.arange(dim)
    amap = np.zeros(dim, dtype=np.intp)
    for q, site in enumerate(order):
        bit = (idx >> (n_sites - 1 - site)) & 1
        amap |= bit << (n_sites - 1 - q)
    return big[np.ix_(amap, amap)]


def ptrace_first(m: np.ndarray, d_aux: int) -> np.ndarray:
    """Partial trace over the leftmost tensor factor of dimension `d_aux`."""
    d = m.shape[0] // d_aux
    return np.einsum("aiaj->ij", m.reshape(d_aux, d, d_aux, d))


def eig_decompose(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a (generally non-normal) square matrix.

    Returns (eigenvalues, eigenvectors) with unit-normalized eigenvector
    columns.  Each pair satisfies ||m v - w v|| <= 1e-10 ||m||_F; violations
    raise EigenSolverError.
    """
    m = np.asarray(m, dtype=complex)
    try:
        w, v = np.linalg.eig(m)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver did not converge: {exc}") from exc
    v = v / np.linalg.norm(v, axis=0, keepdims=True)
    scale = frobenius(m)
    resid = np.linalg.norm(m @ v - v * w, axis=0)
    worst = float(resid.max()) if resid.size else 0.0
    if scale > 0 and worst > 1e-10 * scale:
        raise EigenSolverError(
            f"eigenpair residual {worst:.3e} exceeds 1e-10 * ||m||_F = {1e-10 * scale:.3e}")
    return w, v


def commutator_residual(a: np.ndarray, b: np.ndarray) -> float:
    """||ab - ba||_F / (||a||_F ||b||_F), with 0/0 guarded to 0."""
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise DimensionError(f"commutator needs equal square shapes, got {a.shape} vs {b.shape}")
    denom = frobenius(a) * frobenius(b)
    if denom == 0.0:
        return 0.0
    return frobenius(a @ b - b @ a) / denom
