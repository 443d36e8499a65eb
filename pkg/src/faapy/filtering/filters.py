"""
Column filters for the Anderson least-squares problem.

The length filter drops the oldest columns until a closed-form bound on the
squared Frobenius condition number is at most kappa_bar^2. The angle filter
drops every column whose direction sine against the newer columns is below
c_s. Composed in either order they bound the Frobenius condition number of
the filtered matrix by kappa_bar. Column order is never changed and the
first (newest) column is always kept.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from faapy.exceptions import NumericalBreakdown
from faapy.filtering.bounds import column_bounds
from faapy.linalg import QRFactors, column_norms, direction_sines, economy_qr
from faapy.models.config import FilterOrder, FilterParams

logger = logging.getLogger("faapy.filtering.filters")


@dataclass
class FilterOutcome:
    """
    Result of a filter.

    Attributes:
        kept_mask: Kept flags over the input columns, newest first.
        E: Filtered E (kept columns, original order).
        F: Filtered F (kept columns, original order).
        qr: Factorization of the filtered F, when an angle filter ran.
        c_f_estimate: Condition bound C_F accepted by the length filter.
        sigmas: Direction sines of columns 2..m of the matrix the angle
            filter factored, before any removal.
        dropped_length: Columns removed by the length filter.
        dropped_angle: Columns removed by the angle filter.
    """

    kept_mask: np.ndarray
    E: np.ndarray
    F: np.ndarray
    qr: Optional[QRFactors] = None
    c_f_estimate: Optional[float] = None
    sigmas: Optional[np.ndarray] = field(default=None, repr=False)
    dropped_length: int = 0
    dropped_angle: int = 0

    @property
    def new_depth(self) -> int:
        return int(np.count_nonzero(self.kept_mask))

    @property
    def sigma_min(self) -> Optional[float]:
        if self.sigmas is None or self.sigmas.size == 0:
            return None
        return float(self.sigmas.min())


def _check_pair(E: np.ndarray, F: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    E = np.asarray(E)
    F = np.asarray(F)
    if E.ndim != 2 or F.ndim != 2:
        raise ValueError("E and F must be 2-D matrices")
    if E.shape[1] != F.shape[1]:
        raise ValueError(f"E has {E.shape[1]} columns but F has {F.shape[1]}")
    if F.shape[1] < 1:
        raise ValueError("Filters need at least one column")
    return E, F


def length_filter(E: np.ndarray, F: np.ndarray, params: FilterParams) -> FilterOutcome:
    """
    Keep the longest prefix of columns whose condition bound is within the cap.

    For k = m down to 1, C_F(k) = (sum_{j<=k} ||f_j||^2)(sum_{j<=k} b_j);
    the first k with C_F(k) <= kappa_bar^2 is kept. k = 1 gives C_F = 1 and
    is always accepted.

    Args:
        E: n x m matrix of iterate differences.
        F: n x m matrix of residual differences.
        params: Filter parameters (c_s, kappa_bar).

    Returns:
        FilterOutcome without factorization.
    """
    E, F = _check_pair(E, F)
    m = F.shape[1]
    norms = column_norms(F)
    bounds = column_bounds(norms, params.c_s)

    with np.errstate(over='ignore', invalid='ignore'):
        c_f = np.cumsum(norms ** 2) * np.cumsum(bounds)
    cap = params.kappa_bar ** 2

    keep, accepted = 1, 1.0
    for k in range(m, 1, -1):
        if c_f[k - 1] <= cap:
            keep, accepted = k, float(c_f[k - 1])
            break

    mask = np.zeros(m, dtype=bool)
    mask[:keep] = True
    if keep < m:
        logger.debug(f"Length filter kept {keep} of {m} columns (C_F = {accepted:.3e})")
    return FilterOutcome(
        kept_mask=mask,
        E=E[:, :keep],
        F=F[:, :keep],
        c_f_estimate=accepted,
        dropped_length=m - keep,
    )


def angle_filter(E: np.ndarray, F: np.ndarray, c_s: float) -> FilterOutcome:
    """
    Remove every column i >= 2 whose direction sine is below c_s.

    Sines are computed once on the factorization of the input; the
    factorization is recomputed only if a column was removed. A column
    exactly in the span of the columns before it has sine 0; it is left out
    of the factorization, which leaves the sines of later columns unchanged.

    Raises:
        NumericalBreakdown: Propagated from economy_qr for non-finite or zero columns.
    """
    E, F = _check_pair(E, F)
    m = F.shape[1]
    dependent = np.zeros(m, dtype=bool)
    while True:
        active = np.flatnonzero(~dependent)
        try:
            qr = economy_qr(F[:, active])
            break
        except NumericalBreakdown as e:
            if e.column is None:
                raise
            logger.debug(f"Angle filter: column {int(active[e.column])} is exactly dependent")
            dependent[active[e.column]] = True

    sigmas = np.zeros(m - 1)
    sigmas[active[1:] - 1] = direction_sines(qr, column_norms(F[:, active]))

    mask = np.ones(m, dtype=bool)
    mask[1:] = sigmas >= c_s
    removed = int(F.shape[1] - np.count_nonzero(mask))
    if removed:
        logger.debug(f"Angle filter removed {removed} of {F.shape[1]} columns (c_s = {c_s:.3g})")
        E, F = E[:, mask], F[:, mask]
        qr = economy_qr(F)

    return FilterOutcome(
        kept_mask=mask,
        E=E,
        F=F,
        qr=qr,
        sigmas=sigmas,
        dropped_angle=removed,
    )


def _sharpened_cs(outcome: FilterOutcome, c_s: float) -> float:
    """Smallest realized direction sine of the angle-filtered matrix, never below c_s."""
    if outcome.qr is None or outcome.qr.cols < 2:
        return c_s
    realized = direction_sines(outcome.qr, column_norms(outcome.F))
    return float(min(1.0, max(c_s, realized.min())))


def condition_filter(E: np.ndarray, F: np.ndarray, params: FilterParams) -> FilterOutcome:
    """
    Apply the length and angle filters in the configured order.

    Length-first factors only the surviving prefix. Angle-first truncates
    the factors of the angle-filtered matrix to the kept prefix instead of
    refactoring. In both orders the filtered F satisfies
    ||F||_F ||F^+||_F <= kappa_bar.
    """
    E, F = _check_pair(E, F)
    m = F.shape[1]

    if params.order == FilterOrder.LENGTH_THEN_ANGLE:
        by_length = length_filter(E, F, params)
        by_angle = angle_filter(by_length.E, by_length.F, params.c_s)
        mask = np.zeros(m, dtype=bool)
        mask[np.flatnonzero(by_length.kept_mask)[by_angle.kept_mask]] = True
        return FilterOutcome(
            kept_mask=mask,
            E=by_angle.E,
            F=by_angle.F,
            qr=by_angle.qr,
            c_f_estimate=by_length.c_f_estimate,
            sigmas=by_angle.sigmas,
            dropped_length=by_length.dropped_length,
            dropped_angle=by_angle.dropped_angle,
        )

    by_angle = angle_filter(E, F, params.c_s)
    length_params = params
    if params.sharpen_cs:
        length_params = params.with_cs(_sharpened_cs(by_angle, params.c_s))
    by_length = length_filter(by_angle.E, by_angle.F, length_params)
    keep = by_length.new_depth

    mask = np.zeros(m, dtype=bool)
    mask[np.flatnonzero(by_angle.kept_mask)[:keep]] = True
    return FilterOutcome(
        kept_mask=mask,
        E=by_length.E,
        F=by_length.F,
        qr=by_angle.qr.truncate(keep),
        c_f_estimate=by_length.c_f_estimate,
        sigmas=by_angle.sigmas,
        dropped_length=by_length.dropped_length,
        dropped_angle=by_angle.dropped_angle,
    )
