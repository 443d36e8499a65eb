"""
Tests for the dense linear-algebra kernels.
"""
import numpy as np
import pytest

from faapy.exceptions import NumericalBreakdown, SingularR
from faapy.linalg import (
    QRFactors,
    direction_sines,
    economy_qr,
    frobenius_cond,
    least_squares_solve,
    small_svd,
    triangular_inverse,
)


def gram_schmidt(F):
    """Classical Gram-Schmidt with one reorthogonalization pass; positive diagonal."""
    n, m = F.shape
    Q = np.zeros((n, m), dtype=F.dtype)
    R = np.zeros((m, m), dtype=F.dtype)
    for j in range(m):
        v = F[:, j].copy()
        for _ in range(2):
            coefficients = Q[:, :j].conj().T @ v
            v -= Q[:, :j] @ coefficients
            R[:j, j] += coefficients
        R[j, j] = np.linalg.norm(v)
        Q[:, j] = v / R[j, j]
    return Q, R


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


class TestEconomyQR:
    """Tests for economy_qr."""

    def test_orthonormal_input(self):
        """Leading identity columns factor to themselves up to sign."""
        F = np.eye(3, 2)
        qr = economy_qr(F)
        assert qr.Q.shape == (3, 2)
        assert qr.R.shape == (2, 2)
        np.testing.assert_allclose(np.abs(np.diag(qr.R)), [1.0, 1.0], atol=1e-15)
        np.testing.assert_allclose(qr.Q @ qr.R, F, atol=1e-15)

    def test_single_column(self):
        """A single column is normalized."""
        qr = economy_qr(np.array([[3.0], [4.0]]))
        assert abs(qr.R[0, 0]) == pytest.approx(5.0)
        np.testing.assert_allclose(np.abs(qr.Q[:, 0]), [0.6, 0.8], atol=1e-15)

    def test_random_matches_gram_schmidt(self, rng):
        """Reconstruction, orthogonality and agreement with Gram-Schmidt."""
        F = rng.uniform(-1.0, 1.0, size=(20, 5))
        qr = economy_qr(F)

        assert np.linalg.norm(qr.Q @ qr.R - F) <= 1e-12 * np.linalg.norm(F)
        assert np.max(np.abs(qr.Q.T @ qr.Q - np.eye(5))) <= 1e-12
        assert np.all(np.tril(qr.R, -1) == 0.0)

        Q_gs, R_gs = gram_schmidt(F)
        signs = np.sign(np.diag(qr.R))
        np.testing.assert_allclose(signs[:, None] * qr.R, R_gs, atol=1e-12)
        np.testing.assert_allclose(qr.Q * signs, Q_gs, atol=1e-12)

    def test_complex_input(self, rng):
        """Complex matrices keep unitary Q and phased diagonals."""
        F = rng.standard_normal((12, 4)) + 1j * rng.standard_normal((12, 4))
        qr = economy_qr(F)
        assert qr.Q.dtype == np.complex128
        assert np.linalg.norm(qr.Q @ qr.R - F) <= 1e-12 * np.linalg.norm(F)
        assert np.max(np.abs(qr.Q.conj().T @ qr.Q - np.eye(4))) <= 1e-12

    def test_real_lifted_to_complex(self, rng):
        """A real matrix stored as complex gives the real factorization."""
        F = rng.standard_normal((10, 3))
        real = economy_qr(F)
        lifted = economy_qr(F.astype(np.complex128))
        np.testing.assert_allclose(lifted.R, real.R, atol=1e-12)
        np.testing.assert_allclose(lifted.Q, real.Q, atol=1e-12)

    def test_ill_conditioned_orthogonality(self, rng):
        """Q stays orthonormal for cond_2 around 1e10."""
        U, _ = np.linalg.qr(rng.standard_normal((40, 6)))
        V, _ = np.linalg.qr(rng.standard_normal((6, 6)))
        F = U @ np.diag(np.logspace(0, -10, 6)) @ V.T
        qr = economy_qr(F)
        assert np.max(np.abs(qr.Q.T @ qr.Q - np.eye(6))) <= 1e-12
        assert np.linalg.norm(qr.Q @ qr.R - F) <= 1e-12 * np.linalg.norm(F)

    def test_zero_column_breaks_down(self):
        """A zero column cannot be factored."""
        F = np.array([[1.0, 0.0], [0.0, 0.0], [2.0, 0.0]])
        with pytest.raises(NumericalBreakdown):
            economy_qr(F)

    @pytest.mark.parametrize("dtype", [float, complex])
    def test_dependent_column_breaks_down(self, dtype):
        f = np.array([1.0, 0.0, 0.0, 0.0], dtype=dtype)
        g = np.array([0.0, 0.0, 1.0, 0.0], dtype=dtype)
        with pytest.raises(NumericalBreakdown) as info:
            economy_qr(np.column_stack([f, g, 2.0 * f]))
        assert info.value.column == 2

    def test_zero_column_has_no_index(self):
        with pytest.raises(NumericalBreakdown) as info:
            economy_qr(np.array([[1.0, 0.0], [1.0, 0.0]]))
        assert info.value.column is None

    def test_non_finite_breaks_down(self):
        with pytest.raises(NumericalBreakdown):
            economy_qr(np.array([[1.0, np.nan], [0.0, 1.0]]))

    def test_wide_matrix_rejected(self):
        with pytest.raises(ValueError):
            economy_qr(np.ones((2, 3)))

    def test_truncate_reproduces_prefix(self, rng):
        """Truncated factors reproduce the leading columns."""
        F = rng.standard_normal((15, 6))
        truncated = economy_qr(F).truncate(4)
        assert isinstance(truncated, QRFactors)
        assert np.linalg.norm(truncated.Q @ truncated.R - F[:, :4]) <= 1e-12 * np.linalg.norm(F)

    def test_deterministic(self, rng):
        F = rng.standard_normal((9, 4))
        first, second = economy_qr(F), economy_qr(F)
        assert np.array_equal(first.Q, second.Q)
        assert np.array_equal(first.R, second.R)


class TestLeastSquaresSolve:
    """Tests for least_squares_solve."""

    def test_standard_basis_projection(self):
        F = np.eye(5, 3)
        w = np.array([1.0, -2.0, 3.0, 4.0, 5.0])
        gamma = least_squares_solve(economy_qr(F), w)
        np.testing.assert_allclose(gamma, [1.0, -2.0, 3.0], atol=1e-14)

    def test_single_column_projection(self):
        f = np.array([1.0, 2.0, 2.0])
        w = np.array([3.0, 0.0, 1.0])
        gamma = least_squares_solve(economy_qr(f[:, None]), w)
        assert gamma[0] == pytest.approx(f @ w / (f @ f))

    def test_random_systems_match_normal_equations(self, rng):
        """QR coefficients agree with the normal equations on 200 systems."""
        for _ in range(200):
            F = rng.standard_normal((30, 4))
            w = rng.standard_normal(30)
            gamma = least_squares_solve(economy_qr(F), w)
            oracle = np.linalg.solve(F.T @ F, F.T @ w)
            assert np.linalg.norm(gamma - oracle) <= 1e-9 * np.linalg.norm(oracle)
            residual = F.T @ (F @ gamma - w)
            assert np.linalg.norm(residual) <= 1e-10 * np.linalg.norm(F) * np.linalg.norm(w)

    def test_complex_system(self, rng):
        F = rng.standard_normal((20, 3)) + 1j * rng.standard_normal((20, 3))
        w = rng.standard_normal(20) + 1j * rng.standard_normal(20)
        gamma = least_squares_solve(economy_qr(F), w)
        oracle = np.linalg.solve(F.conj().T @ F, F.conj().T @ w)
        np.testing.assert_allclose(gamma, oracle, rtol=1e-9)

    def test_singular_r(self):
        """A negligible diagonal entry cannot be solved against."""
        qr = economy_qr(np.array([[1.0, 1.0], [0.0, 1e-40], [0.0, 0.0]]))
        with pytest.raises(SingularR):
            least_squares_solve(qr, np.ones(3))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            least_squares_solve(economy_qr(np.eye(3, 2)), np.ones(4))


class TestSmallSvd:
    """Tests for small_svd."""

    def test_diagonal(self):
        svd = small_svd(np.diag([3.0, 1.0]))
        np.testing.assert_allclose(svd.singular_values, [3.0, 1.0], atol=1e-15)
        np.testing.assert_allclose(np.abs(svd.U), np.eye(2), atol=1e-15)
        np.testing.assert_allclose(np.abs(svd.V), np.eye(2), atol=1e-15)

    def test_unit_upper_triangular(self):
        """Singular values of [[1, 1], [0, 1]] are the golden ratio and its inverse."""
        phi = (1.0 + np.sqrt(5.0)) / 2.0
        svd = small_svd(np.array([[1.0, 1.0], [0.0, 1.0]]))
        np.testing.assert_allclose(svd.singular_values, [phi, 1.0 / phi], rtol=1e-14)

    def test_random_triangular_against_eigenvalues(self, rng):
        R = np.triu(rng.standard_normal((8, 8)))
        svd = small_svd(R)
        assert np.linalg.norm(svd.reconstruct() - R) <= 1e-11 * np.linalg.norm(R)
        assert np.all(np.diff(svd.singular_values) <= 0.0)
        oracle = np.sqrt(np.clip(np.linalg.eigvalsh(R.T @ R), 0.0, None))[::-1]
        np.testing.assert_allclose(svd.singular_values, oracle, rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(svd.U.T @ svd.U, np.eye(8), atol=1e-12)
        np.testing.assert_allclose(svd.V.T @ svd.V, np.eye(8), atol=1e-12)

    def test_invariant_under_rotations(self, rng):
        """Unitary factors on either side leave the singular values unchanged."""
        R = np.triu(rng.standard_normal((6, 6)))
        P, _ = np.linalg.qr(rng.standard_normal((6, 6)))
        W, _ = np.linalg.qr(rng.standard_normal((6, 6)))
        np.testing.assert_allclose(small_svd(P @ R @ W).singular_values,
                                   small_svd(R).singular_values, rtol=1e-9)

    def test_complex_matrix(self, rng):
        R = np.triu(rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5)))
        svd = small_svd(R)
        assert np.linalg.norm(svd.reconstruct() - R) <= 1e-11 * np.linalg.norm(R)
        np.testing.assert_allclose(svd.singular_values,
                                   np.linalg.svd(R, compute_uv=False), rtol=1e-9)

    def test_rank_deficient(self):
        """A zero singular value still yields unitary U."""
        svd = small_svd(np.array([[1.0, 1.0], [0.0, 0.0]]))
        np.testing.assert_allclose(svd.singular_values, [np.sqrt(2.0), 0.0], atol=1e-15)
        np.testing.assert_allclose(svd.U.T @ svd.U, np.eye(2), atol=1e-12)

    def test_rejects_large_order(self):
        with pytest.raises(ValueError):
            small_svd(np.eye(65))


class TestTriangularInverse:
    """Tests for triangular_inverse."""

    def test_identity(self):
        np.testing.assert_array_equal(triangular_inverse(np.eye(3)), np.eye(3))

    def test_diagonal(self):
        np.testing.assert_allclose(triangular_inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]))

    def test_unit_upper(self):
        np.testing.assert_allclose(triangular_inverse(np.array([[1.0, 1.0], [0.0, 1.0]])),
                                   [[1.0, -1.0], [0.0, 1.0]])

    def test_random_is_upper_and_inverse(self, rng):
        R = np.triu(rng.standard_normal((7, 7))) + 3.0 * np.eye(7)
        inverse = triangular_inverse(R)
        assert np.all(np.tril(inverse, -1) == 0.0)
        assert np.max(np.abs(R @ inverse - np.eye(7))) <= 1e-10

    def test_singular(self):
        with pytest.raises(SingularR):
            triangular_inverse(np.array([[1.0, 2.0], [0.0, 0.0]]))


class TestFrobeniusCond:
    """Tests for frobenius_cond."""

    def test_identity(self):
        assert frobenius_cond(np.eye(4)) == pytest.approx(4.0)

    def test_embedded_diagonal(self):
        F = np.zeros((4, 2))
        F[0, 0], F[1, 1] = 2.0, 1.0
        assert frobenius_cond(F) == pytest.approx(2.5)

    def test_random_matches_svd_oracle(self, rng):
        F = rng.standard_normal((20, 5))
        sigma = np.linalg.svd(F, compute_uv=False)
        oracle = np.linalg.norm(F) * np.sqrt(np.sum(sigma ** -2.0))
        assert frobenius_cond(F) == pytest.approx(oracle, rel=1e-8)
        cond2 = sigma[0] / sigma[-1]
        assert cond2 <= frobenius_cond(F) <= 5 * cond2 * (1.0 + 1e-12)

    def test_dependent_columns(self):
        f = np.array([2.0, 0.0, 0.0])
        with pytest.raises(NumericalBreakdown):
            frobenius_cond(np.column_stack([f, -f]))
        with pytest.raises(SingularR):
            frobenius_cond(np.column_stack([f, f + np.array([0.0, 1e-40, 0.0])]))


class TestDirectionSines:
    """Tests for direction_sines."""

    def test_orthogonal_columns(self):
        F = np.diag([1.0, 5.0, 0.5])
        qr = economy_qr(F)
        np.testing.assert_allclose(direction_sines(qr, [1.0, 5.0, 0.5]), [1.0, 1.0])

    def test_nearly_parallel_columns(self):
        f = np.array([1.0, 2.0, 3.0])
        normal = np.array([3.0, 0.0, -1.0])
        F = np.column_stack([f, 0.5 * f + 1e-14 * normal])
        qr = economy_qr(F)
        sines = direction_sines(qr, np.linalg.norm(F, axis=0))
        assert sines[0] == pytest.approx(0.0, abs=1e-13)

    def test_hand_example(self):
        F = np.array([[1.0, 0.8], [0.0, 0.6]])
        qr = economy_qr(F)
        np.testing.assert_allclose(direction_sines(qr, [1.0, 1.0]), [0.6], rtol=1e-14)

    def test_single_column_has_no_sines(self):
        qr = economy_qr(np.array([[1.0], [1.0]]))
        assert direction_sines(qr, [np.sqrt(2.0)]).size == 0

    def test_rejects_bad_norms(self):
        qr = economy_qr(np.eye(2))
        with pytest.raises(ValueError):
            direction_sines(qr, [1.0, 0.0])
        with pytest.raises(ValueError):
            direction_sines(qr, [1.0])
