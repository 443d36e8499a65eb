"""
Harness configuration models for faapy.

RunConfig describes one solve; CompareConfig several strategies on one
problem; SweepConfig a parameter grid around a base run.
"""

from typing import Any, Dict, List, Optional

from pydantic import Field

from faapy.models.base import BaseModel
from faapy.models.config import SolverConfig

# Grid axes a sweep may vary, mapped to SolverConfig fields
SWEEP_AXES = {
    "cs": "cs",
    "kappa": "kappa_bar",
    "m": "m",
    "beta": "beta",
    "strategy": "strategy",
}


class ProblemSpec(BaseModel):
    """Problem name and parameter overrides."""

    name: str = Field(..., min_length=1)
    params: Dict[str, Any] = Field(default_factory=dict)


class RunConfig(BaseModel):
    """One fixed-point solve and its artifact options."""

    problem: ProblemSpec
    solver: SolverConfig = Field(default_factory=SolverConfig)
    output_dir: Optional[str] = None
    label: Optional[str] = None
    plots: bool = True
    parquet: bool = False

    @property
    def run_label(self) -> str:
        if self.label:
            return self.label
        return f"{self.problem.name}-{self.solver.strategy.value}"


class CompareEntry(BaseModel):
    """One strategy block of a comparison."""

    label: str = Field(..., min_length=1)
    solver: SolverConfig
    problem: Optional[ProblemSpec] = None


class CompareConfig(BaseModel):
    """Several strategies sharing one problem."""

    problem: ProblemSpec
    runs: List[CompareEntry]
    output_dir: Optional[str] = None
    label: Optional[str] = None
    plots: bool = True

    def validate_model(self) -> List[str]:
        errors = []
        if len(self.runs) < 2:
            errors.append("runs: a comparison needs at least 2 strategy blocks")
        labels = [run.label for run in self.runs]
        if len(set(labels)) != len(labels):
            errors.append("runs: labels must be unique")
        for index, run in enumerate(self.runs):
            if run.problem is not None and run.problem != self.problem:
                errors.append(f"runs.{index}.problem: differs from the shared problem block")
        return errors


class SweepConfig(BaseModel):
    """Parameter grid over SolverConfig fields around a base run."""

    problem: ProblemSpec
    solver: SolverConfig = Field(default_factory=SolverConfig)
    grid: Dict[str, List[Any]]
    output_dir: Optional[str] = None
    label: Optional[str] = None
    workers: int = Field(1, ge=1)
    plots: bool = False

    def validate_model(self) -> List[str]:
        errors = []
        if not self.grid or any(len(values) == 0 for values in self.grid.values()):
            errors.append("grid: the parameter grid is empty")
        for axis in self.grid:
            if axis not in SWEEP_AXES:
                errors.append(f"grid.{axis}: unknown sweep axis (allowed: {', '.join(SWEEP_AXES)})")
        return errors
