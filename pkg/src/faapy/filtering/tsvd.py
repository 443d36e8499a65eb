"""
Truncated SVD solve of the Anderson least-squares problem.

F = QR, R = U S V*; the largest s with sigma_1 / sigma_s < kappa_bar is
kept and gamma = V_s S_s^-1 U_s* Q* w. All m coefficients are returned;
the truncated directions contribute nothing.
"""

import logging
from dataclasses import dataclass

import numpy as np

from faapy.linalg import QRFactors, SvdFactors, economy_qr, small_svd

logger = logging.getLogger("faapy.filtering.tsvd")


@dataclass(frozen=True)
class TruncatedSvd:
    """
    Truncated factorization of a least-squares matrix.

    Attributes:
        qr: Economy QR of F.
        svd: SVD of the triangular factor.
        rank: Number s of singular values kept.
    """

    qr: QRFactors
    svd: SvdFactors
    rank: int

    @property
    def ratio(self) -> float:
        """sigma_1 / sigma_s of the kept singular values."""
        sigma = self.svd.singular_values
        return float(sigma[0] / sigma[self.rank - 1])

    def solve(self, w: np.ndarray) -> np.ndarray:
        s = self.rank
        projected = self.qr.Q.conj().T @ np.asarray(w)
        coefficients = (self.svd.U[:, :s].conj().T @ projected) / self.svd.singular_values[:s]
        return self.svd.V[:, :s] @ coefficients


def truncated_rank(singular_values: np.ndarray, kappa_bar: float) -> int:
    """Largest s with sigma_1 / sigma_s < kappa_bar; at least 1."""
    sigma = np.asarray(singular_values, dtype=float)
    if sigma.size == 0 or sigma[0] <= 0.0:
        raise ValueError("Truncation needs a nonzero leading singular value")
    with np.errstate(divide='ignore'):
        ratios = sigma[0] / sigma
    admissible = np.flatnonzero(ratios < kappa_bar)
    return int(admissible[-1]) + 1 if admissible.size else 1


def tsvd_factor(F: np.ndarray, kappa_bar: float) -> TruncatedSvd:
    """
    Factor F and choose the truncation rank.

    Raises:
        NumericalBreakdown: Propagated from economy_qr.
        NoConvergence: Propagated from small_svd.
    """
    if kappa_bar <= 1.0:
        raise ValueError(f"kappa_bar must exceed 1, got {kappa_bar}")
    qr = economy_qr(F)
    svd = small_svd(qr.R)
    rank = truncated_rank(svd.singular_values, kappa_bar)
    if rank < qr.cols:
        logger.debug(f"TSVD kept {rank} of {qr.cols} singular values (kappa_bar = {kappa_bar:.1e})")
    return TruncatedSvd(qr=qr, svd=svd, rank=rank)


def tsvd_solve(F: np.ndarray, w: np.ndarray, kappa_bar: float) -> np.ndarray:
    """
    Truncated-SVD least-squares coefficients.

    Args:
        F: n x m matrix, n >= m >= 1.
        w: Right-hand side of length n.
        kappa_bar: Cap on sigma_1 / sigma_s, > 1.

    Returns:
        Coefficient vector of length m.
    """
    return tsvd_factor(F, kappa_bar).solve(w)
