"""
Harness module for faapy.

Single runs, strategy comparisons and parameter sweeps with their CSV, JSON,
Parquet and SVG artifacts.
"""

from faapy.harness.compare import CompareReport, combined_table, run_compare
from faapy.harness.runner import (
    EXIT_CONFIG_ERROR,
    EXIT_CONVERGED,
    EXIT_DIVERGED,
    EXIT_MAX_ITERS,
    RunArtifacts,
    build_summary,
    run_single,
)
from faapy.harness.sweep import SweepReport, grid_points, point_solver, run_sweep

__all__ = [
    'EXIT_CONVERGED',
    'EXIT_CONFIG_ERROR',
    'EXIT_MAX_ITERS',
    'EXIT_DIVERGED',
    'RunArtifacts',
    'build_summary',
    'run_single',
    'CompareReport',
    'combined_table',
    'run_compare',
    'SweepReport',
    'grid_points',
    'point_solver',
    'run_sweep',
]
