"""
Column bounds for the inverse triangular factor.

Given the column norms of F and a lower bound c_s on the direction sines,
b_j bounds the squared norm of column j of R^-1. b_j depends only on
columns 1..j, so the bounds of a prefix are a prefix of the bounds.
"""

import math
from typing import Sequence

import numpy as np


def column_bounds(column_norms: Sequence[float], c_s: float) -> np.ndarray:
    """
    Upper bounds b_1..b_m on ||s_j||^2, s_j column j of R^-1.

        b_1 = 1 / ||f_1||^2
        b_j = c_s^-2 ( c_t^2 r^(2(j-2)) / ||f_1||^2
                       + sum_{i=2}^{j-1} c_t^2 r^(2(j-i-1)) / (c_s^2 ||f_i||^2)
                       + 1 / ||f_j||^2 ),     j >= 2,

    with c_t = sqrt(1 - c_s^2) and r = (c_t + c_s) / c_s.

    Args:
        column_norms: Positive norms ||f_1||..||f_m||.
        c_s: Minimum direction sine, 0 < c_s <= 1.

    Returns:
        Array of m bounds. Entries may overflow to +inf as c_s -> 0.
    """
    norms = np.asarray(column_norms, dtype=float)
    if norms.ndim != 1 or norms.size == 0:
        raise ValueError("column_bounds needs a non-empty list of norms")
    if np.any(norms <= 0.0):
        raise ValueError("Column norms must be positive")
    if not 0.0 < c_s <= 1.0:
        raise ValueError(f"c_s must lie in (0, 1], got {c_s}")

    m = norms.size
    inv_sq = 1.0 / norms ** 2
    c_t_sq = max(0.0, 1.0 - c_s * c_s)
    c_t = math.sqrt(c_t_sq)
    cs_sq = c_s * c_s

    bounds = np.empty(m)
    bounds[0] = inv_sq[0]
    with np.errstate(over='ignore', invalid='ignore'):
        # growth[p] = r^(2p)
        growth = ((c_t + c_s) / c_s) ** (2.0 * np.arange(m))
        for j in range(1, m):
            total = c_t_sq * growth[j - 1] * inv_sq[0]
            if j > 1:
                middle = inv_sq[1:j] * growth[j - 2::-1][:j - 1]
                total += c_t_sq * middle.sum() / cs_sq
            total += inv_sq[j]
            bounds[j] = total / cs_sq
    bounds[~np.isfinite(bounds)] = np.inf
    return bounds
