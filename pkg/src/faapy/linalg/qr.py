"""
Economy QR factorization and the kernels built on it.

Householder reflections with explicit accumulation of the thin Q factor.
Real and complex inputs are handled natively: inner products conjugate the
first argument and the diagonal of R keeps its natural sign or phase.
"""

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import scipy.linalg

from faapy.exceptions import NumericalBreakdown, SingularR

logger = logging.getLogger("faapy.linalg.qr")

# |r_ii| below this fraction of max |r_jj| is treated as singular
SINGULAR_RATIO = 1e-30


@dataclass(frozen=True)
class QRFactors:
    """
    Economy factorization F = QR.

    Attributes:
        Q: n x m matrix with orthonormal columns.
        R: m x m upper triangular matrix (strict lower part stored as exact zeros).
    """

    Q: np.ndarray
    R: np.ndarray

    @property
    def rows(self) -> int:
        return self.Q.shape[0]

    @property
    def cols(self) -> int:
        return self.R.shape[0]

    def truncate(self, k: int) -> "QRFactors":
        """
        Keep the factors of the leading k columns of F.

        Q[:, :k] R[:k, :k] reproduces F[:, :k] because R is upper triangular.
        """
        if not 1 <= k <= self.cols:
            raise ValueError(f"Cannot truncate a {self.cols}-column factorization to {k} columns")
        return QRFactors(Q=self.Q[:, :k].copy(), R=self.R[:k, :k].copy())


def _as_matrix(F: np.ndarray) -> np.ndarray:
    F = np.asarray(F)
    if F.ndim == 1:
        F = F[:, np.newaxis]
    if F.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got array with shape {F.shape}")
    dtype = np.complex128 if np.iscomplexobj(F) else np.float64
    return np.array(F, dtype=dtype, copy=True)


def economy_qr(F: np.ndarray) -> QRFactors:
    """
    Compute the economy QR factorization of a tall or square matrix.

    Args:
        F: n x m matrix with n >= m >= 1 and finite entries.

    Returns:
        QRFactors with Q (n x m, orthonormal columns) and R (m x m, upper triangular).

    Raises:
        NumericalBreakdown: If F has a non-finite entry, a column of zero norm,
            or a column exactly dependent on the columns before it.
        ValueError: If F is wide.
    """
    R = _as_matrix(F)
    n, m = R.shape
    if m < 1 or n < m:
        raise ValueError(f"economy_qr needs n >= m >= 1, got {n} x {m}")
    if not np.all(np.isfinite(R)):
        raise NumericalBreakdown("Matrix has non-finite entries")

    column_norms = np.linalg.norm(R, axis=0)
    zero_columns = np.flatnonzero(column_norms == 0.0)
    if zero_columns.size:
        raise NumericalBreakdown(f"Column {int(zero_columns[0])} has zero norm")

    reflectors = []
    for j in range(m):
        x = R[j:, j]
        normx = np.linalg.norm(x)
        if normx == 0.0:
            raise NumericalBreakdown(
                f"Column {j} lies in the span of the columns before it", column=j
            )

        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x.copy()
        v[0] += phase * normx
        v /= np.linalg.norm(v)
        reflectors.append(v)

        R[j:, j:] -= 2.0 * np.outer(v, v.conj() @ R[j:, j:])
        R[j + 1:, j] = 0.0

    Q = np.eye(n, m, dtype=R.dtype)
    for j in range(m - 1, -1, -1):
        v = reflectors[j]
        Q[j:, :] -= 2.0 * np.outer(v, v.conj() @ Q[j:, :])

    return QRFactors(Q=Q, R=np.triu(R[:m, :]))


def _check_diagonal(R: np.ndarray) -> None:
    diag = np.abs(np.diag(R))
    if diag.size == 0:
        raise SingularR("Empty triangular factor")
    largest = diag.max()
    if largest == 0.0 or not np.isfinite(largest):
        raise SingularR("Triangular factor has no usable diagonal entry")
    small = np.flatnonzero(diag < SINGULAR_RATIO * largest)
    if small.size:
        raise SingularR(
            f"Diagonal entry r[{int(small[0])},{int(small[0])}] is negligible "
            f"(|r| = {diag[small[0]]:.3e}, max |r| = {largest:.3e})"
        )


def least_squares_solve(qr: QRFactors, w: np.ndarray) -> np.ndarray:
    """
    Solve min ||F gamma - w|| through R gamma = Q* w.

    Args:
        qr: Economy factorization of F.
        w: Right-hand side of length n.

    Returns:
        Coefficient vector gamma of length m.

    Raises:
        SingularR: If any |r_ii| < 1e-30 max_j |r_jj|.
    """
    w = np.asarray(w)
    if w.shape != (qr.rows,):
        raise ValueError(f"Right-hand side has shape {w.shape}, expected ({qr.rows},)")
    _check_diagonal(qr.R)
    rhs = qr.Q.conj().T @ w
    return scipy.linalg.solve_triangular(qr.R, rhs, lower=False)


def triangular_inverse(R: np.ndarray) -> np.ndarray:
    """
    Invert an upper triangular matrix.

    Raises:
        SingularR: If a diagonal entry is negligible.
    """
    R = np.asarray(R)
    _check_diagonal(R)
    identity = np.eye(R.shape[0], dtype=R.dtype)
    return np.triu(scipy.linalg.solve_triangular(R, identity, lower=False))


def frobenius_cond_from_qr(F: np.ndarray, qr: QRFactors) -> float:
    """Frobenius condition number ||F||_F ||R^-1||_F using an existing factorization."""
    return float(np.linalg.norm(F, "fro") * np.linalg.norm(triangular_inverse(qr.R), "fro"))


def frobenius_cond(F: np.ndarray) -> float:
    """
    Frobenius condition number of a full-column-rank matrix.

    Computed as ||F||_F ||R^-1||_F from the economy QR factorization, which
    equals ||F||_F ||F^+||_F and is never smaller than the number of columns.

    Raises:
        SingularR: If the columns are (numerically) dependent.
    """
    F = _as_matrix(F)
    return frobenius_cond_from_qr(F, economy_qr(F))


def column_norms(F: np.ndarray) -> np.ndarray:
    """Euclidean norms of the columns of F."""
    return np.linalg.norm(np.asarray(F), axis=0)


def direction_sines(qr: QRFactors, column_norms: Sequence[float]) -> np.ndarray:
    """
    Direction sines sigma_i = |r_ii| / ||f_i|| for columns i = 2..m.

    sigma_i is the sine of the angle between column i and the span of the
    columns to its left. A single-column factorization yields an empty array.

    Args:
        qr: Economy factorization of F.
        column_norms: Positive norms of the columns of F.

    Returns:
        Array of length m - 1 with values clamped to [0, 1].
    """
    norms = np.asarray(column_norms, dtype=float)
    if norms.shape != (qr.cols,):
        raise ValueError(f"Expected {qr.cols} column norms, got {norms.shape}")
    if np.any(norms <= 0.0):
        raise ValueError("Column norms must be positive")
    sines = np.abs(np.diag(qr.R))[1:] / norms[1:]
    return np.clip(sines, 0.0, 1.0)
