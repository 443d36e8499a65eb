"""
One-dimensional nonlinear Helmholtz problem.

    u'' + k0^2 (1 + eps |u|^2) u = 0  on (0, L),
    u' + i k0 u = 2 i k0  at x = 0,
    u' - i k0 u = 0       at x = L.

The Picard map freezes |u|^2 at the previous iterate and solves the linear
complex tridiagonal system. Second-order central differences in the interior;
the Robin rows eliminate a ghost node on each side, which keeps second order.
"""

import logging

import numpy as np
import scipy.linalg
from pydantic import Field

from faapy.exceptions import SingularSystem
from faapy.models.base import BaseModel
from faapy.problems.base import FixedPointProblem, register_problem

logger = logging.getLogger("faapy.problems.helmholtz")


class NlhParams(BaseModel):
    """Nonlinear Helmholtz parameters."""

    k0: float = Field(8.0, gt=0.0, description="Linear wavenumber")
    eps: float = Field(0.2, description="Kerr coefficient")
    N: int = Field(2001, ge=3, description="Grid points including both ends")
    length: float = Field(10.0, gt=0.0, description="Domain length")


@register_problem
class NlhProblem(FixedPointProblem):
    """Picard iteration for the nonlinear Helmholtz equation."""

    problem_name = "nlh"
    description = "1D nonlinear Helmholtz (Kerr) equation, complex tridiagonal Picard map"
    params_model = NlhParams
    is_complex = True

    def __init__(self, params: NlhParams = None):
        super().__init__(params)
        p = self.params
        self.nodes = np.linspace(0.0, p.length, p.N)
        self.h = p.length / (p.N - 1)

    @property
    def dimension(self) -> int:
        return self.params.N

    def initial_guess(self) -> np.ndarray:
        """Nodal values of exp(i k0 x), the solution for eps = 0."""
        return np.exp(1j * self.params.k0 * self.nodes)

    def banded_system(self, u: np.ndarray):
        """
        Tridiagonal system of the Picard update frozen at u.

        Returns:
            (ab, rhs) in scipy.linalg.solve_banded layout (1, 1).
        """
        p = self.params
        h = self.h
        h2 = h * h
        q = p.k0 ** 2 * (1.0 + p.eps * np.abs(u) ** 2)

        ab = np.zeros((3, p.N), dtype=np.complex128)
        ab[0, 1:] = 1.0 / h2
        ab[1, :] = -2.0 / h2 + q
        ab[2, :-1] = 1.0 / h2

        robin = (-2.0 + 2.0j * h * p.k0) / h2
        ab[1, 0] = robin + q[0]
        ab[0, 1] = 2.0 / h2
        ab[1, -1] = robin + q[-1]
        ab[2, -2] = 2.0 / h2

        rhs = np.zeros(p.N, dtype=np.complex128)
        rhs[0] = 4.0j * p.k0 / h
        return ab, rhs

    def map(self, x: np.ndarray) -> np.ndarray:
        ab, rhs = self.banded_system(x)
        try:
            return scipy.linalg.solve_banded((1, 1), ab, rhs, check_finite=False)
        except (np.linalg.LinAlgError, ValueError) as e:
            raise SingularSystem(f"nlh: tridiagonal solve failed: {str(e)}")


def nlh_problem(params: NlhParams = None) -> NlhProblem:
    """Nonlinear Helmholtz problem (complex field)."""
    return NlhProblem(params)
