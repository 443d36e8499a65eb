"""
Regularized p-Laplace problem on (0, 2)^2.

    -div(a(u) grad u) = f,  a(u) = (eps^2 + |grad u|^2 / 2)^((p - 2) / 2),

with homogeneous Dirichlet data. The update w solves the variable-coefficient
system -div(a(u_k) grad w) = f + div(a(u_k) grad u_k), so the coefficient
matrix is assembled and factored on every evaluation. g(u) = u + w.
"""

import logging
import math

import numpy as np
from pydantic import Field, field_validator

from faapy.models.base import BaseModel
from faapy.problems.base import FixedPointProblem, register_problem
from faapy.problems.grid import SquareGrid, factorize

logger = logging.getLogger("faapy.problems.plap")


class PLapParams(BaseModel):
    """p-Laplace parameters. p = 2 reduces the problem to Poisson."""

    p: float = Field(1.04, description="Exponent, 1 < p <= 2")
    eps_reg: float = Field(1e-14, gt=0.0, description="Regularization")
    f: float = Field(math.pi, description="Constant forcing")
    subdivisions: int = Field(64, ge=4, description="Grid cells per axis")

    @field_validator("p")
    @classmethod
    def _check_p(cls, value: float) -> float:
        if not 1.0 < value <= 2.0:
            raise ValueError("p must lie in (1, 2]")
        return value


@register_problem
class PLapProblem(FixedPointProblem):
    """Picard (frozen coefficient) iteration for the regularized p-Laplacian."""

    problem_name = "plap"
    description = "Regularized p-Laplace equation on (0,2)^2, variable-coefficient Picard map"
    params_model = PLapParams

    def __init__(self, params: PLapParams = None):
        super().__init__(params)
        self.grid = SquareGrid(self.params.subdivisions, 2.0)
        self.forcing = np.full(self.grid.size, self.params.f)

    @property
    def dimension(self) -> int:
        return self.grid.size

    def initial_guess(self) -> np.ndarray:
        """xy(x-1)(y-1)(x-2)(y-2) at the interior nodes."""
        X, Y = self.grid.interior_nodes()
        u0 = X * Y * (X - 1.0) * (Y - 1.0) * (X - 2.0) * (Y - 2.0)
        return u0.ravel()

    def coefficient(self, gradient_norm: np.ndarray) -> np.ndarray:
        p = self.params
        return (p.eps_reg ** 2 + 0.5 * gradient_norm ** 2) ** ((p.p - 2.0) / 2.0)

    def system(self, u: np.ndarray):
        """
        Coefficient matrix A(u) of -div(a(u) grad .).

        The coefficient is evaluated per triangle, where the gradient of the
        piecewise-linear iterate is constant, and averaged onto the edges.
        """
        below, above = self.grid.triangle_gradient_norms(u)
        ax, ay = self.grid.triangle_edge_coefficients(self.coefficient(below),
                                                      self.coefficient(above))
        return self.grid.diffusion_operator(ax, ay)

    def update(self, u: np.ndarray) -> np.ndarray:
        A = self.system(u)
        return factorize(A, self.problem_name).solve(self.forcing - A @ u)

    def map(self, x: np.ndarray) -> np.ndarray:
        return x + self.update(x)


def plap_problem(params: PLapParams = None) -> PLapProblem:
    """Regularized p-Laplace problem (real field)."""
    return PLapProblem(params)
