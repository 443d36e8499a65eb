"""
Monotone quasilinear problem on the unit square.

    -div(mu(|grad u|) grad u) = f,  u = 0 on the boundary,
    mu(s) = 1 + arctan(s).

The update w solves the Poisson problem -Laplace w = f + div(mu(|grad u|) grad u)
and the map is the undamped g(u) = u + w; relaxation is left to the
driver. The Poisson matrix never changes, so its factorization is computed
once per problem.
"""

import logging
import math
from typing import Callable, Optional

import numpy as np
from pydantic import Field

from faapy.models.base import BaseModel
from faapy.problems.base import FixedPointProblem, register_problem
from faapy.problems.grid import SquareGrid, factorize

logger = logging.getLogger("faapy.problems.quasilinear")

BETA_STAR = (1.0 + math.sqrt(3.0) / 2.0 + math.pi / 3.0) ** -2


def arctan_diffusivity(s: np.ndarray) -> np.ndarray:
    return 1.0 + np.arctan(s)


class QuasilinearParams(BaseModel):
    """Quasilinear problem parameters."""

    subdivisions: int = Field(64, ge=4, description="Grid cells per axis")
    f: float = Field(math.pi, description="Constant forcing")


@register_problem
class QuasilinearProblem(FixedPointProblem):
    """Fixed-point form of the monotone quasilinear equation."""

    problem_name = "quasilinear"
    description = "Monotone quasilinear diffusion, mu = 1 + arctan|grad u|, on (0,1)^2"
    params_model = QuasilinearParams
    beta_star = BETA_STAR

    def __init__(self, params: QuasilinearParams = None,
                 mu: Optional[Callable[[np.ndarray], np.ndarray]] = None):
        """
        Args:
            params: Problem parameters.
            mu: Diffusivity as a function of |grad u|; 1 + arctan by default.
        """
        super().__init__(params)
        self.grid = SquareGrid(self.params.subdivisions, 1.0)
        self.mu = mu or arctan_diffusivity
        self.forcing = np.full(self.grid.size, self.params.f)
        self._poisson = factorize(self.grid.laplacian(), self.problem_name)

    @property
    def dimension(self) -> int:
        return self.grid.size

    def flux_divergence(self, u: np.ndarray) -> np.ndarray:
        """div_h(mu(|grad u|) grad u) at the interior nodes."""
        ax, ay = self.grid.edge_coefficients(self.grid.cell_gradient_norms(u))
        return -(self.grid.diffusion_operator(self.mu(ax), self.mu(ay)) @ u)

    def update(self, u: np.ndarray) -> np.ndarray:
        """Update step w solving -Laplace w = f + div(mu grad u)."""
        return self._poisson.solve(self.forcing + self.flux_divergence(u))

    def map(self, x: np.ndarray) -> np.ndarray:
        return x + self.update(x)


def quasilinear_problem(params: QuasilinearParams = None) -> QuasilinearProblem:
    """Monotone quasilinear problem (real field)."""
    return QuasilinearProblem(params)
