"""
Affine toy problem g(x) = Ax + b.
"""

from functools import cached_property
from typing import Optional

import numpy as np
from pydantic import Field

from faapy.models.base import BaseModel
from faapy.problems.base import FixedPointProblem, register_problem


class LinearToyParams(BaseModel):
    """Random affine map with prescribed spectral norm."""

    n: int = Field(10, ge=1, description="Dimension")
    rho: float = Field(0.9, ge=0.0, description="Spectral norm ||A||_2")
    seed: int = Field(0, ge=0, description="Generator seed")


@register_problem
class LinearToyProblem(FixedPointProblem):
    """g(x) = Ax + b; the fixed point is (I - A)^-1 b whenever rho(A) < 1."""

    problem_name = "linear_toy"
    description = "Affine map Ax + b with random A scaled to ||A||_2 = rho"
    params_model = LinearToyParams

    def __init__(self, A: np.ndarray, b: np.ndarray, params: Optional[LinearToyParams] = None):
        super().__init__(params)
        A = np.atleast_2d(np.asarray(A))
        b = np.atleast_1d(np.asarray(b))
        if A.shape[0] != A.shape[1] or A.shape[0] != b.shape[0]:
            raise ValueError(f"Need square A matching b, got A {A.shape} and b {b.shape}")
        self.A = A
        self.b = b
        self.is_complex = bool(np.iscomplexobj(A) or np.iscomplexobj(b))

    @classmethod
    def from_params(cls, params: LinearToyParams) -> "LinearToyProblem":
        rng = np.random.default_rng(params.seed)
        A = rng.standard_normal((params.n, params.n))
        A *= params.rho / np.linalg.norm(A, 2)
        b = rng.standard_normal(params.n)
        return cls(A, b, params)

    @property
    def dimension(self) -> int:
        return self.b.shape[0]

    @property
    def spectral_radius(self) -> float:
        return float(np.abs(np.linalg.eigvals(self.A)).max())

    @cached_property
    def _solution(self) -> Optional[np.ndarray]:
        if self.spectral_radius >= 1.0:
            return None
        return np.linalg.solve(np.eye(self.dimension) - self.A, self.b)

    @property
    def solution(self) -> Optional[np.ndarray]:
        return self._solution

    def map(self, x: np.ndarray) -> np.ndarray:
        return self.A @ x + self.b


def linear_toy(A: np.ndarray, b: np.ndarray) -> LinearToyProblem:
    """Affine fixed-point problem g(x) = Ax + b."""
    return LinearToyProblem(A, b)
