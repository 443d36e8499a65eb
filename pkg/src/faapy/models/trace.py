"""
Run telemetry models for faapy.

IterationRecord holds the per-iteration quantities of a solve; RunTrace
holds the records, the final iterate and the convergence outcome.
"""

from typing import List, Optional

import numpy as np
from pydantic import ConfigDict, Field

from faapy.models.base import BaseModel

# Residuals of a non-converged run whose last 10 values stay below this
# are classified ">max", otherwise "F".
STALL_WINDOW = 10
STALL_LEVEL = 1.0

STATUS_CONVERGED = "converged"
STATUS_OVER_BUDGET = ">max"
STATUS_FAILED = "F"


class IterationRecord(BaseModel):
    """Telemetry of iteration k, whose residual is w_{k+1}."""

    k: int = Field(..., ge=0)
    residual_norm: float = Field(..., description="||w_{k+1}||")
    theta: float = Field(1.0, description="Optimization gain of the coefficients used")
    cond_F: float = Field(0.0, description="Condition of the least-squares matrix used, 0 if none")
    m_k: int = Field(0, ge=0, description="Depth after filtering")
    kept_mask: List[bool] = Field(default_factory=list, description="Kept flags, newest column first")
    cs_used: float = 0.0
    beta_used: float = 1.0
    sigma_min: Optional[float] = Field(None, description="Smallest direction sine seen by the angle filter")
    dropped_length: int = 0
    dropped_angle: int = 0
    tsvd_rank: Optional[int] = None
    elapsed_s: float = 0.0

    @property
    def mask_string(self) -> str:
        return "".join("1" if kept else "0" for kept in self.kept_mask)


class RunTrace(BaseModel):
    """Outcome of a solve."""

    model_config = ConfigDict(extra='forbid', arbitrary_types_allowed=True)

    records: List[IterationRecord] = Field(default_factory=list)
    converged: bool = False
    final_x: Optional[np.ndarray] = None
    diverged: bool = False

    @property
    def iters(self) -> int:
        return len(self.records)

    @property
    def final_residual(self) -> Optional[float]:
        return self.records[-1].residual_norm if self.records else None

    @property
    def max_cond(self) -> float:
        return max((r.cond_F for r in self.records), default=0.0)

    @property
    def residual_norms(self) -> np.ndarray:
        return np.array([r.residual_norm for r in self.records])

    def status(self) -> str:
        """
        Classify the run.

        Returns:
            "converged", ">max" when the last 10 residuals are below 1, else "F".
        """
        if self.converged:
            return STATUS_CONVERGED
        if self.diverged or len(self.records) < STALL_WINDOW:
            return STATUS_FAILED
        tail = self.residual_norms[-STALL_WINDOW:]
        if np.all(np.isfinite(tail)) and np.all(tail < STALL_LEVEL):
            return STATUS_OVER_BUDGET
        return STATUS_FAILED
