"""Spectral utilities: operator norm and PSD projection."""
import numpy as np
from scipy.sparse.linalg import eigsh

from .errors import DomainError

_DENSE_LIMIT = 1500


def operator_norm(m):
    """Largest singular value, relative error <= 1e-10.

    Dense SVD up to the desk-scale limit; beyond that a Lanczos solve on
    the Gram operator with a fixed start vector (keeps results
    run-to-run identical).
    """
    m = np.asarray(m)
    if m.size == 0:
        raise DomainError("operator_norm of an empty matrix")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise DomainError("operator_norm requires finite entries")
    if min(m.shape) <= _DENSE_LIMIT:
        return float(np.linalg.svd(m, compute_uv=False)[0])
    g = m.conj().T @ m if m.shape[0] >= m.shape[1] else m @ m.conj().T
    v0 = np.ones(g.shape[0]) / np.sqrt(g.shape[0])
    lam = eigsh(g, k=1, which="LA", v0=v0, return_eigenvectors=False)[0]
    return float(np.sqrt(max(lam, 0.0)))


def is_hermitian(m, tol=1e-10):
    m = np.asarray(m)
    if m.shape[0] != m.shape[1]:
        return False
    scale = max(np.abs(m).max(), 1.0)
    return np.abs(m - m.conj().T).max() <= tol * scale


def psd_project(m, tol=1e-10):
    """Nearest PSD matrix in Frobenius norm: clip negative eigenvalues."""
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        raise DomainError("psd_project requires a hermitian matrix")
    m = 0.5 * (m + m.conj().T)
    w, v = np.linalg.eigh(m)
    w = np.maximum(w, 0.0)
    out = (v * w) @ v.conj().T
    return 0.5 * (out + out.conj().T)
