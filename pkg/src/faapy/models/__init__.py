"""
Models module for faapy.

This module provides the pydantic models for solver configuration, run
telemetry and harness configuration.
"""

from faapy.models.base import BaseModel
from faapy.models.config import (
    BETA_STAR,
    DYNAMIC_CS,
    DepthSchedule,
    FilterOrder,
    FilterParams,
    SolverConfig,
    Strategy,
)
from faapy.models.run import CompareConfig, CompareEntry, ProblemSpec, RunConfig, SweepConfig
from faapy.models.trace import IterationRecord, RunTrace

__all__ = [
    'BaseModel',
    'BETA_STAR',
    'DYNAMIC_CS',
    'DepthSchedule',
    'FilterOrder',
    'FilterParams',
    'SolverConfig',
    'Strategy',
    'IterationRecord',
    'RunTrace',
    'ProblemSpec',
    'RunConfig',
    'CompareEntry',
    'CompareConfig',
    'SweepConfig',
]
