"""
Parameter schedules of the accelerator: dynamic angle parameter and depth caps.
"""

import math

from faapy.models.config import SolverConfig

CS_UPPER = 2.0 ** -0.5
CS_LOWER = 0.1


def dynamic_cs(w_norm: float) -> float:
    """
    Angle parameter from the current residual norm.

    max{min{||w||^(1/2), 2^(-1/2)}, 0.1}: strict filtering while the
    residual is large, relaxed towards 0.1 as it converges.
    """
    if w_norm < 0.0:
        raise ValueError(f"Residual norm must be nonnegative, got {w_norm}")
    return max(min(math.sqrt(w_norm), CS_UPPER), CS_LOWER)


def effective_depth(k: int, residual_norm: float, config: SolverConfig, latched: bool = False) -> int:
    """
    Depth cap at iteration k.

    Constant schedules give min{k, m}. Multilevel schedules give
    min{k, m_early} until the residual has once dropped below tau
    (`latched`, or the current residual), then min{k, m_late}.
    """
    if k < 0:
        raise ValueError(f"Iteration index must be nonnegative, got {k}")
    schedule = config.depth_schedule
    if schedule.kind == "constant":
        return min(k, config.m)
    if latched or residual_norm < schedule.tau:
        return min(k, schedule.m_late)
    return min(k, schedule.m_early)


class DepthController:
    """Tracks the one-way switch of a multilevel depth schedule."""

    def __init__(self, config: SolverConfig):
        self.config = config
        self.latched = False

    @property
    def capacity(self) -> int:
        schedule = self.config.depth_schedule
        if schedule.kind == "constant":
            return self.config.m
        return max(schedule.m_early, schedule.m_late)

    def cap(self, k: int, residual_norm: float) -> int:
        schedule = self.config.depth_schedule
        if schedule.kind == "multilevel" and not self.latched and residual_norm < schedule.tau:
            self.latched = True
        return effective_depth(k, residual_norm, self.config, latched=self.latched)
