"""
Singular value decomposition of small square matrices.

One-sided (Hestenes) Jacobi: columns of A = R V are rotated pairwise until
mutually orthogonal, then U = A diag(1/sigma) and sigma = column norms.
Complex matrices use a phase-corrected real rotation per pair.
"""

import logging
from dataclasses import dataclass

import numpy as np

from faapy.exceptions import NoConvergence

logger = logging.getLogger("faapy.linalg.svd")

MAX_ORDER = 64
SWEEPS_PER_COLUMN = 30
OFF_DIAGONAL_TOL = 1e-14


@dataclass(frozen=True)
class SvdFactors:
    """
    R = U diag(singular_values) V*.

    Attributes:
        U: m x m unitary matrix.
        singular_values: Nonincreasing, nonnegative, length m.
        V: m x m unitary matrix.
    """

    U: np.ndarray
    singular_values: np.ndarray
    V: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.U * self.singular_values) @ self.V.conj().T


def _complete_columns(U: np.ndarray, filled: np.ndarray) -> np.ndarray:
    """Replace the columns of U not marked in `filled` by an orthonormal completion."""
    m = U.shape[0]
    basis = [U[:, j] for j in np.flatnonzero(filled)]
    candidates = iter(np.eye(m, dtype=U.dtype).T)
    for j in np.flatnonzero(~filled):
        while True:
            e = next(candidates).copy()
            for _ in range(2):
                for b in basis:
                    e -= (b.conj() @ e) * b
            norm = np.linalg.norm(e)
            if norm > 0.5:
                break
        U[:, j] = e / norm
        basis.append(U[:, j])
    return U


def small_svd(R: np.ndarray) -> SvdFactors:
    """
    Singular value decomposition of a small square (upper triangular) matrix.

    Args:
        R: m x m matrix with m <= 64 and finite entries.

    Returns:
        SvdFactors with singular values sorted nonincreasing.

    Raises:
        NoConvergence: If more than 30 m sweeps are needed.
    """
    R = np.asarray(R)
    if R.ndim != 2 or R.shape[0] != R.shape[1]:
        raise ValueError(f"small_svd expects a square matrix, got shape {R.shape}")
    m = R.shape[0]
    if m > MAX_ORDER:
        raise ValueError(f"small_svd is limited to order {MAX_ORDER}, got {m}")
    if not np.all(np.isfinite(R)):
        raise ValueError("small_svd input has non-finite entries")

    dtype = np.complex128 if np.iscomplexobj(R) else np.float64
    A = np.array(R, dtype=dtype, copy=True)
    V = np.eye(m, dtype=dtype)

    max_sweeps = SWEEPS_PER_COLUMN * max(m, 1)
    for sweep in range(max_sweeps):
        rotated = False
        for p in range(m - 1):
            for q in range(p + 1, m):
                alpha = np.vdot(A[:, p], A[:, p]).real
                beta = np.vdot(A[:, q], A[:, q]).real
                gamma = np.vdot(A[:, p], A[:, q])
                magnitude = abs(gamma)
                if magnitude == 0.0 or magnitude <= OFF_DIAGONAL_TOL * np.sqrt(alpha * beta):
                    continue
                rotated = True

                phase = gamma / magnitude
                zeta = (beta - alpha) / (2.0 * magnitude)
                sign = 1.0 if zeta >= 0.0 else -1.0
                t = sign / (abs(zeta) + np.sqrt(1.0 + zeta * zeta))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = c * t

                for M in (A, V):
                    col_p = M[:, p].copy()
                    col_q = M[:, q] * np.conj(phase)
                    M[:, p] = c * col_p - s * col_q
                    M[:, q] = s * col_p + c * col_q
        if not rotated:
            logger.debug(f"Jacobi SVD of order {m} converged after {sweep + 1} sweeps")
            break
    else:
        raise NoConvergence(f"One-sided Jacobi did not converge within {max_sweeps} sweeps")

    sigma = np.linalg.norm(A, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    A = A[:, order]
    V = V[:, order]

    U = np.zeros((m, m), dtype=dtype)
    filled = sigma > 0.0
    U[:, filled] = A[:, filled] / sigma[filled]
    if not np.all(filled):
        U = _complete_columns(U, filled)

    return SvdFactors(U=U, singular_values=sigma, V=V)
