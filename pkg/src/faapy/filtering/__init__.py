"""
Filtering module for faapy.

Stabilization strategies for the Anderson least-squares problem: column
bounds, length and angle filters, their composition, and the TSVD baseline.
"""

from faapy.filtering.bounds import column_bounds
from faapy.filtering.filters import FilterOutcome, angle_filter, condition_filter, length_filter
from faapy.filtering.tsvd import TruncatedSvd, truncated_rank, tsvd_factor, tsvd_solve

__all__ = [
    'column_bounds',
    'FilterOutcome',
    'length_filter',
    'angle_filter',
    'condition_filter',
    'TruncatedSvd',
    'truncated_rank',
    'tsvd_factor',
    'tsvd_solve',
]
