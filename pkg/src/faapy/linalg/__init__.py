"""
Dense linear-algebra kernels for faapy.

Economy QR, least-squares solve, small-matrix SVD, triangular inverse,
Frobenius condition numbers and direction sines, over real or complex
double precision.
"""

from faapy.linalg.qr import (
    QRFactors,
    column_norms,
    direction_sines,
    economy_qr,
    frobenius_cond,
    frobenius_cond_from_qr,
    least_squares_solve,
    triangular_inverse,
)
from faapy.linalg.svd import SvdFactors, small_svd

__all__ = [
    'QRFactors',
    'SvdFactors',
    'economy_qr',
    'least_squares_solve',
    'small_svd',
    'triangular_inverse',
    'frobenius_cond',
    'frobenius_cond_from_qr',
    'direction_sines',
    'column_norms',
]
