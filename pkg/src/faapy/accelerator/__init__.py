"""
Accelerator module for faapy.

Anderson acceleration with optional condition filtering or truncated SVD,
the sliding history window and the parameter schedules.
"""

from faapy.accelerator.driver import aa_update, gain, residual, solve
from faapy.accelerator.history import ColumnHistory
from faapy.accelerator.schedules import DepthController, dynamic_cs, effective_depth

__all__ = [
    'ColumnHistory',
    'DepthController',
    'residual',
    'gain',
    'aa_update',
    'solve',
    'dynamic_cs',
    'effective_depth',
]
