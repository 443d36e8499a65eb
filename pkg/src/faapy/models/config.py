"""
Solver configuration models for faapy.

FilterParams carries the condition-filter parameters; SolverConfig carries
the strategy selector and the relaxation, angle-parameter and depth
schedules of a run.
"""

import math
from enum import Enum
from typing import Any, List, Literal, Optional, Union

from pydantic import Field, field_validator, model_validator

from faapy.models.base import BaseModel

DEFAULT_KAPPA = 1e8
BETA_STAR = "beta-star"
DYNAMIC_CS = "dynamic"
UNACCELERATED = "none"


class FilterOrder(str, Enum):
    """Order in which the two column filters are applied."""

    LENGTH_THEN_ANGLE = "length-first"
    ANGLE_THEN_LENGTH = "angle-first"


class Strategy(str, Enum):
    """Least-squares stabilization strategy."""

    PLAIN_AA = "aa"
    FAA = "faa"
    TSVD = "tsvd"


class FilterParams(BaseModel):
    """
    Parameters of the condition filter.

    c_s is the smallest allowed direction sine; kappa_bar caps the
    Frobenius condition number of the filtered least-squares matrix.
    """

    c_s: float = Field(..., gt=0.0, le=1.0, description="Minimum direction sine")
    kappa_bar: float = Field(DEFAULT_KAPPA, ge=1.0, description="Maximum Frobenius condition number")
    order: FilterOrder = Field(FilterOrder.LENGTH_THEN_ANGLE, description="Filter order")
    sharpen_cs: bool = Field(
        False,
        description="For angle-first order, run the length filter with the smallest realized direction sine",
    )

    @property
    def c_t(self) -> float:
        """Cosine bound sqrt(1 - c_s^2)."""
        return math.sqrt(max(0.0, 1.0 - self.c_s * self.c_s))

    def with_cs(self, c_s: float) -> "FilterParams":
        return self.model_copy(update={"c_s": c_s})


class DepthSchedule(BaseModel):
    """
    Depth cap schedule.

    `constant` caps the history at min(k, m). `multilevel` uses m_early
    until the residual first drops below tau, then m_late for the rest of
    the run.
    """

    kind: Literal["constant", "multilevel"] = "constant"
    tau: Optional[float] = Field(None, gt=0.0)
    m_early: Optional[int] = Field(None, ge=0)
    m_late: Optional[int] = Field(None, ge=0)

    def validate_model(self) -> List[str]:
        errors = []
        if self.kind == "multilevel":
            if self.tau is None or self.m_early is None or self.m_late is None:
                errors.append("depth_schedule: multilevel requires tau, m_early and m_late")
            elif self.m_early > self.m_late:
                errors.append("depth_schedule: m_early must not exceed m_late")
        return errors

    @model_validator(mode="after")
    def _check_multilevel(self) -> "DepthSchedule":
        errors = self.validate_model()
        if errors:
            raise ValueError("; ".join(errors))
        return self

    @classmethod
    def parse(cls, text: str) -> "DepthSchedule":
        """
        Parse `constant` or `multilevel:tau,m_early,m_late`.

        Raises:
            ValueError: If the text is malformed.
        """
        text = text.strip()
        if text == "constant":
            return cls(kind="constant")
        if text.startswith("multilevel:"):
            pieces = text.split(":", 1)[1].split(",")
            if len(pieces) != 3:
                raise ValueError(f"Expected multilevel:tau,m_early,m_late, got '{text}'")
            return cls(kind="multilevel", tau=float(pieces[0]), m_early=int(pieces[1]),
                       m_late=int(pieces[2]))
        raise ValueError(f"Unknown depth schedule '{text}'")


class SolverConfig(BaseModel):
    """
    Configuration of one fixed-point solve.

    `beta` is a number in (0, 1] or "beta-star" (resolved against the
    problem); `cs` is a number in (0, 1] or "dynamic".
    """

    strategy: Strategy = Field(Strategy.FAA, description="Stabilization strategy")
    m: int = Field(10, ge=0, description="Maximum algorithmic depth")
    beta: Union[float, Literal["beta-star"]] = Field(1.0, description="Constant relaxation parameter")
    cs: Union[float, Literal["dynamic"]] = Field(0.1, description="Angle filter parameter schedule")
    kappa_bar: float = Field(DEFAULT_KAPPA, ge=1.0, description="Condition cap of the filter")
    tsvd_kappa: Optional[float] = Field(None, gt=1.0, description="Singular value ratio cap of TSVD")
    order: FilterOrder = Field(FilterOrder.LENGTH_THEN_ANGLE)
    sharpen_cs: bool = False
    depth_schedule: DepthSchedule = Field(default_factory=DepthSchedule)
    tol: float = Field(1e-10, gt=0.0, description="Residual convergence threshold")
    max_iters: int = Field(500, ge=1, description="Iteration budget")

    @model_validator(mode="before")
    @classmethod
    def _unaccelerated(cls, data: Any) -> Any:
        # "none" is plain AA with an empty history
        if isinstance(data, dict) and data.get("strategy") == UNACCELERATED:
            data = {**data, "strategy": Strategy.PLAIN_AA.value, "m": 0}
        return data

    @field_validator("beta")
    @classmethod
    def _check_beta(cls, value: Any) -> Any:
        if isinstance(value, str):
            return value
        if not 0.0 < value <= 1.0:
            raise ValueError("beta must lie in (0, 1]")
        return value

    @field_validator("cs")
    @classmethod
    def _check_cs(cls, value: Any) -> Any:
        if isinstance(value, str):
            return value
        if not 0.0 < value <= 1.0:
            raise ValueError("cs must lie in (0, 1]")
        return value

    @field_validator("depth_schedule", mode="before")
    @classmethod
    def _parse_depth_schedule(cls, value: Any) -> Any:
        if isinstance(value, str):
            return DepthSchedule.parse(value)
        return value

    @model_validator(mode="after")
    def _check_tsvd_kappa(self) -> "SolverConfig":
        if self.strategy == Strategy.TSVD and self.effective_tsvd_kappa <= 1.0:
            raise ValueError("tsvd_kappa (or kappa_bar when unset) must exceed 1 for TSVD")
        return self

    @property
    def dynamic_cs(self) -> bool:
        return self.cs == DYNAMIC_CS

    @property
    def effective_tsvd_kappa(self) -> float:
        return self.tsvd_kappa if self.tsvd_kappa is not None else self.kappa_bar

    def filter_params(self, c_s: float) -> FilterParams:
        """Filter parameters for one iteration with angle parameter c_s."""
        return FilterParams(c_s=c_s, kappa_bar=self.kappa_bar, order=self.order,
                            sharpen_cs=self.sharpen_cs)

    def resolve_beta(self, beta_star: Optional[float]) -> "SolverConfig":
        """
        Replace beta = "beta-star" by the problem's value.

        Raises:
            ValueError: If beta-star is requested but the problem reports none.
        """
        if self.beta != BETA_STAR:
            return self
        if beta_star is None:
            raise ValueError("beta: 'beta-star' requested but the problem defines no beta*")
        return self.model_copy(update={"beta": float(beta_star)})

    @property
    def beta_value(self) -> float:
        if isinstance(self.beta, str):
            raise ValueError("beta is still symbolic; call resolve_beta first")
        return float(self.beta)
