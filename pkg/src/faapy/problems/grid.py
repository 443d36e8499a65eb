"""
Finite-difference operators on a uniform square grid.

The unknowns are the interior nodes of an M x M subdivision of (0, L)^2
with homogeneous Dirichlet data, ordered with the x index major. Diffusion
coefficients live on cell edges; an edge takes the average of the values
of its two adjacent cells, or of its two adjacent triangles when each cell
is split along its diagonal.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.sparse
import scipy.sparse.linalg

from faapy.exceptions import SingularSystem


@dataclass(frozen=True)
class SquareGrid:
    """
    Uniform grid on (0, length)^2.

    Attributes:
        subdivisions: Cells per axis (M).
        length: Side length.
    """

    subdivisions: int
    length: float = 1.0

    @property
    def h(self) -> float:
        return self.length / self.subdivisions

    @property
    def interior(self) -> int:
        """Interior nodes per axis."""
        return self.subdivisions - 1

    @property
    def size(self) -> int:
        return self.interior * self.interior

    def interior_nodes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Coordinates (X, Y) of the interior nodes, each of shape (M-1, M-1)."""
        axis = np.linspace(0.0, self.length, self.subdivisions + 1)[1:-1]
        return np.meshgrid(axis, axis, indexing="ij")

    def pad(self, u: np.ndarray) -> np.ndarray:
        """Nodal array of shape (M+1, M+1) with the zero boundary values added."""
        return np.pad(np.asarray(u).reshape(self.interior, self.interior), 1)

    def cell_gradient_norms(self, u: np.ndarray) -> np.ndarray:
        """
        |grad u| at the cell centres, shape (M, M).

        Each component averages the two parallel edge differences of the cell.
        """
        U = self.pad(u)
        dx = U[1:, :] - U[:-1, :]
        dy = U[:, 1:] - U[:, :-1]
        gx = 0.5 * (dx[:, 1:] + dx[:, :-1]) / self.h
        gy = 0.5 * (dy[1:, :] + dy[:-1, :]) / self.h
        return np.hypot(gx, gy)

    def triangle_gradient_norms(self, u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        |grad u| on the two right triangles of each cell, shapes (M, M).

        Cells are split along the diagonal from (x_i, y_j) to (x_i+1, y_j+1).
        The gradient of the linear interpolant is exact on each triangle and
        is read off its two legs.

        Returns:
            (below, above): below has its right angle at (x_i+1, y_j) and
            legs on the bottom and right edges; above has its right angle at
            (x_i, y_j+1) and legs on the top and left edges.
        """
        U = self.pad(u)
        dx = (U[1:, :] - U[:-1, :]) / self.h
        dy = (U[:, 1:] - U[:, :-1]) / self.h
        below = np.hypot(dx[:, :-1], dy[1:, :])
        above = np.hypot(dx[:, 1:], dy[:-1, :])
        return below, above

    def triangle_edge_coefficients(
        self, below: np.ndarray, above: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Edge coefficients from per-triangle values.

        Every edge touching an interior node is a leg of exactly two
        triangles and takes their mean, which makes the five-point matrix
        equal to the piecewise-linear stiffness matrix of the triangulation.

        Returns:
            (ax, ay) with the shapes of `edge_coefficients`.
        """
        ax = 0.5 * (below[:, 1:] + above[:, :-1])
        ay = 0.5 * (below[:-1, :] + above[1:, :])
        return ax, ay

    def edge_coefficients(self, cell_values: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """
        Coefficients on the edges that touch an interior node.

        Returns:
            (ax, ay): ax of shape (M, M-1) on edges parallel to x,
            ay of shape (M-1, M) on edges parallel to y.
        """
        ax = 0.5 * (cell_values[:, :-1] + cell_values[:, 1:])
        ay = 0.5 * (cell_values[:-1, :] + cell_values[1:, :])
        return ax, ay

    def _difference(self) -> scipy.sparse.csr_matrix:
        # edges 0..M-1 along one axis against interior nodes 1..M-1
        M = self.subdivisions
        return scipy.sparse.diags([1.0, -1.0], [0, -1], shape=(M, M - 1), format="csr")

    def diffusion_operator(self, ax: np.ndarray, ay: np.ndarray) -> scipy.sparse.csc_matrix:
        """
        Five-point matrix of -div(a grad .) with edge coefficients ax, ay.

        The matrix is symmetric, and positive definite for positive coefficients.
        """
        D = self._difference()
        I = scipy.sparse.identity(self.interior, format="csr")
        Dx = scipy.sparse.kron(D, I, format="csr") / self.h
        Dy = scipy.sparse.kron(I, D, format="csr") / self.h
        A = (Dx.T @ scipy.sparse.diags(np.ravel(ax)) @ Dx
             + Dy.T @ scipy.sparse.diags(np.ravel(ay)) @ Dy)
        return A.tocsc()

    def laplacian(self) -> scipy.sparse.csc_matrix:
        """Five-point matrix of -Laplace."""
        M = self.subdivisions
        return self.diffusion_operator(np.ones((M, M - 1)), np.ones((M - 1, M)))


def factorize(A: scipy.sparse.spmatrix, name: str):
    """
    Sparse LU factorization.

    Raises:
        SingularSystem: If the matrix is singular or has non-finite entries.
    """
    if not np.all(np.isfinite(A.data)):
        raise SingularSystem(f"{name}: system matrix has non-finite entries")
    try:
        return scipy.sparse.linalg.splu(scipy.sparse.csc_matrix(A))
    except RuntimeError as e:
        raise SingularSystem(f"{name}: sparse factorization failed: {str(e)}")
