"""
Property suites: the condition guarantee of the filters, the column bounds
of the inverse triangular factor, and small closed-form invariants.
"""
import itertools

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from faapy.accelerator import dynamic_cs
from faapy.filtering import column_bounds, condition_filter
from faapy.linalg import direction_sines, economy_qr
from faapy.models import FilterOrder, FilterParams

CS_VALUES = [0.1, 0.4, 2.0 ** -0.5]
KAPPA_VALUES = [1e2, 1e4, 1e8]
# 9 settings x 2 orders x 56 trials = 1008 instances
TRIALS_PER_SETTING = 56
SMALLEST_SCALE = 1e-120


def oracle_frobenius_cond(F):
    sigma = np.linalg.svd(F, compute_uv=False)
    return np.linalg.norm(F) * np.sqrt(np.sum(sigma ** -2.0))


def stress_matrix(rng):
    """
    Random history matrix with decaying column lengths and near-parallel
    injections.
    """
    n = int(rng.integers(50, 2001))
    m = int(rng.integers(2, 41))
    ratio = 10.0 ** rng.uniform(-6.0, -1.0)
    scales = np.maximum(ratio ** rng.uniform(0.0, 1.0, size=m).cumsum(), SMALLEST_SCALE)
    F = rng.standard_normal((n, m)) * scales
    for j in range(1, m):
        if rng.random() < 0.25:
            jitter = 10.0 ** rng.uniform(-12.0, -2.0)
            noise = jitter * scales[j] * rng.standard_normal(n)
            F[:, j] = F[:, j - 1] * rng.uniform(0.5, 2.0) + noise
    return F


class TestConditionGuarantee:
    """The filtered matrix never exceeds the condition cap."""

    @pytest.mark.parametrize("order", list(FilterOrder))
    @pytest.mark.parametrize("c_s,kappa_bar", list(itertools.product(CS_VALUES, KAPPA_VALUES)))
    def test_filtered_condition_within_cap(self, c_s, kappa_bar, order):
        rng = np.random.default_rng(int(1000 * c_s) + int(np.log10(kappa_bar)))
        params = FilterParams(c_s=c_s, kappa_bar=kappa_bar, order=order)
        for _ in range(TRIALS_PER_SETTING):
            F = stress_matrix(rng)
            outcome = condition_filter(F, F, params)
            assert outcome.kept_mask[0]
            assert outcome.new_depth >= 1
            assert oracle_frobenius_cond(outcome.F) <= kappa_bar * (1.0 + 1e-6)


class TestColumnBoundOracle:
    """Columns of R^-1 respect the closed-form bounds when every sine is at least c_s."""

    @staticmethod
    def constrained_triangular(rng, m, c_s):
        R = np.zeros((m, m))
        for j in range(m):
            diagonal = 10.0 ** rng.uniform(-3.0, 3.0)
            if j == 0:
                R[0, 0] = diagonal
                continue
            sine = rng.uniform(c_s, 1.0)
            direction = rng.standard_normal(j)
            direction /= np.linalg.norm(direction)
            R[:j, j] = direction * diagonal * np.sqrt(1.0 / sine ** 2 - 1.0)
            R[j, j] = diagonal * rng.choice([-1.0, 1.0])
        return R

    def test_closed_form(self):
        np.testing.assert_allclose(column_bounds([1.0, 1.0, 1.0], 2.0 ** -0.5), [1.0, 3.0, 8.0],
                                   rtol=1e-12)

    @pytest.mark.parametrize("c_s", CS_VALUES)
    def test_inverse_columns_bounded(self, c_s):
        rng = np.random.default_rng(int(c_s * 1e4))
        for _ in range(170):
            m = int(rng.integers(1, 11))
            R = self.constrained_triangular(rng, m, c_s)
            Q, _ = np.linalg.qr(rng.standard_normal((m + 5, m)))
            F = Q @ R
            norms = np.linalg.norm(F, axis=0)

            sines = direction_sines(economy_qr(F), norms)
            assert np.all(sines >= c_s * (1.0 - 1e-10))

            inverse = scipy.linalg.solve_triangular(R, np.eye(m), lower=False)
            bounds = column_bounds(norms, c_s)
            squared = np.sum(inverse ** 2, axis=0)
            assert np.all(squared <= bounds * (1.0 + 1e-10))


class TestClosedFormInvariants:
    """Hypothesis checks on small closed-form quantities."""

    @given(st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
    def test_dynamic_cs_range(self, w_norm):
        value = dynamic_cs(w_norm)
        assert 0.1 <= value <= 2.0 ** -0.5

    @given(st.floats(min_value=0.01, max_value=0.5))
    def test_dynamic_cs_square_root_band(self, w_norm):
        assert dynamic_cs(w_norm) == pytest.approx(np.sqrt(w_norm))

    @given(
        st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=1, max_size=12),
        st.floats(min_value=0.05, max_value=1.0),
    )
    def test_bounds_positive_and_prefix_stable(self, norms, c_s):
        bounds = column_bounds(norms, c_s)
        assert np.all(bounds > 0.0)
        assert bounds[0] == pytest.approx(1.0 / norms[0] ** 2)
        if len(norms) > 1:
            np.testing.assert_array_equal(column_bounds(norms[:-1], c_s), bounds[:-1])

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(min_value=2, max_value=8))
    def test_direction_sines_in_unit_interval(self, seed, m):
        rng = np.random.default_rng(seed)
        F = rng.standard_normal((m + 3, m))
        sines = direction_sines(economy_qr(F), np.linalg.norm(F, axis=0))
        assert sines.shape == (m - 1,)
        assert np.all((0.0 <= sines) & (sines <= 1.0))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_bounds_decrease_with_larger_sine(self, seed):
        rng = np.random.default_rng(seed)
        norms = rng.uniform(0.1, 10.0, size=6)
        loose = column_bounds(norms, 0.2)
        tight = column_bounds(norms, 0.6)
        assert np.all(tight <= loose)
