"""
Tests for the configuration and telemetry models.
"""
import json
import math

import pytest

from faapy.exceptions import ConfigValidationError, FileReadError
from faapy.models import (
    CompareConfig,
    DepthSchedule,
    FilterOrder,
    FilterParams,
    IterationRecord,
    RunConfig,
    RunTrace,
    SolverConfig,
    Strategy,
    SweepConfig,
)


@pytest.fixture
def problem_block():
    return {"name": "linear_toy", "params": {"n": 5}}


def trace_with(residuals, converged=False, diverged=False):
    records = [IterationRecord(k=k, residual_norm=r) for k, r in enumerate(residuals)]
    return RunTrace(records=records, converged=converged, diverged=diverged)


class TestFilterParams:
    """Tests for FilterParams."""

    def test_defaults(self):
        params = FilterParams(c_s=0.6)
        assert params.kappa_bar == 1e8
        assert params.order == FilterOrder.LENGTH_THEN_ANGLE
        assert params.sharpen_cs is False
        assert params.c_t == pytest.approx(0.8)

    def test_with_cs(self):
        params = FilterParams(c_s=0.1, kappa_bar=10.0).with_cs(0.5)
        assert params.c_s == 0.5
        assert params.kappa_bar == 10.0

    @pytest.mark.parametrize("data", [
        {"c_s": 0.0},
        {"c_s": 1.5},
        {"c_s": 0.5, "kappa_bar": 0.5},
        {"c_s": 0.5, "order": "random"},
    ])
    def test_invalid(self, data):
        with pytest.raises(ConfigValidationError):
            FilterParams.from_dict(data)

    def test_kappa_of_one_allowed(self):
        assert FilterParams(c_s=1.0, kappa_bar=1.0).c_t == 0.0


class TestDepthSchedule:
    """Tests for DepthSchedule."""

    def test_parse_constant(self):
        assert DepthSchedule.parse("constant").kind == "constant"

    def test_parse_multilevel(self):
        schedule = DepthSchedule.parse("multilevel:1e-2,1,20")
        assert (schedule.kind, schedule.tau, schedule.m_early, schedule.m_late) == \
            ("multilevel", 1e-2, 1, 20)

    @pytest.mark.parametrize("text", ["multilevel:1e-2,1", "adaptive", "multilevel:x,1,2"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            DepthSchedule.parse(text)

    def test_early_depth_must_not_exceed_late(self):
        with pytest.raises(ConfigValidationError) as info:
            DepthSchedule.from_dict({"kind": "multilevel", "tau": 0.1, "m_early": 5, "m_late": 2})
        assert "m_early" in str(info.value)

    def test_multilevel_needs_all_fields(self):
        with pytest.raises(ConfigValidationError):
            DepthSchedule.from_dict({"kind": "multilevel", "tau": 0.1})


class TestSolverConfig:
    """Tests for SolverConfig."""

    def test_defaults(self):
        config = SolverConfig()
        assert config.strategy == Strategy.FAA
        assert (config.m, config.beta, config.cs, config.kappa_bar) == (10, 1.0, 0.1, 1e8)
        assert (config.tol, config.max_iters) == (1e-10, 500)
        assert config.depth_schedule.kind == "constant"
        assert not config.dynamic_cs

    def test_unaccelerated_is_plain_without_history(self):
        config = SolverConfig.from_dict({"strategy": "none", "m": 12})
        assert config.strategy == Strategy.PLAIN_AA
        assert config.m == 0

    def test_depth_schedule_from_string(self):
        config = SolverConfig(m=20, depth_schedule="multilevel:0.01,1,20")
        assert config.depth_schedule.m_late == 20

    @pytest.mark.parametrize("data,key", [
        ({"beta": 0.0}, "beta"),
        ({"beta": 1.5}, "beta"),
        ({"beta": "half"}, "beta"),
        ({"cs": 2.0}, "cs"),
        ({"cs": "static"}, "cs"),
        ({"m": -1}, "m"),
        ({"tol": 0.0}, "tol"),
        ({"max_iters": 0}, "max_iters"),
        ({"strategy": "gmres"}, "strategy"),
        ({"kappa": 10.0}, "kappa"),
    ])
    def test_invalid_values_name_the_key(self, data, key):
        with pytest.raises(ConfigValidationError) as info:
            SolverConfig.from_dict(data)
        assert key in str(info.value)

    def test_tsvd_needs_cap_above_one(self):
        with pytest.raises(ConfigValidationError):
            SolverConfig.from_dict({"strategy": "tsvd", "kappa_bar": 1.0})
        config = SolverConfig.from_dict({"strategy": "tsvd", "kappa_bar": 1.0, "tsvd_kappa": 1e3})
        assert config.effective_tsvd_kappa == 1e3

    def test_filter_params(self):
        config = SolverConfig(kappa_bar=1e4, order="angle-first", sharpen_cs=True)
        params = config.filter_params(0.3)
        assert params.c_s == 0.3
        assert params.kappa_bar == 1e4
        assert params.order == FilterOrder.ANGLE_THEN_LENGTH
        assert params.sharpen_cs

    def test_resolve_beta(self):
        config = SolverConfig(beta="beta-star")
        with pytest.raises(ValueError):
            config.beta_value
        assert config.resolve_beta(0.25).beta_value == 0.25
        with pytest.raises(ValueError):
            config.resolve_beta(None)
        assert SolverConfig(beta=0.5).resolve_beta(None).beta == 0.5

    def test_dict_round_trip(self):
        config = SolverConfig(strategy="tsvd", m=4, cs="dynamic", tsvd_kappa=1e3,
                              depth_schedule="multilevel:0.1,2,4")
        data = config.to_dict()
        assert data["strategy"] == "tsvd"
        assert data["depth_schedule"]["kind"] == "multilevel"
        assert SolverConfig.from_dict(data) == config

    def test_json_export(self, tmp_path):
        path = tmp_path / "solver.json"
        SolverConfig(m=3).export_to_json(str(path))
        assert json.loads(path.read_text())["m"] == 3
        assert SolverConfig.import_from_json(str(path)).m == 3

    def test_import_missing_file(self, tmp_path):
        with pytest.raises(FileReadError):
            SolverConfig.import_from_json(str(tmp_path / "missing.json"))

    def test_from_invalid_json(self):
        with pytest.raises(ConfigValidationError):
            SolverConfig.from_json("{not json")


class TestTrace:
    """Tests for IterationRecord and RunTrace."""

    def test_mask_string(self):
        record = IterationRecord(k=3, residual_norm=0.1, kept_mask=[True, False, True])
        assert record.mask_string == "101"
        assert IterationRecord(k=0, residual_norm=1.0).mask_string == ""

    def test_empty_trace(self):
        trace = RunTrace()
        assert trace.iters == 0
        assert trace.final_residual is None
        assert trace.max_cond == 0.0
        assert trace.status() == "F"

    def test_converged_status(self):
        trace = trace_with([1.0, 1e-12], converged=True)
        assert trace.status() == "converged"
        assert trace.final_residual == 1e-12

    def test_stalled_below_one_is_over_budget(self):
        assert trace_with([0.5] * 12).status() == ">max"

    def test_large_tail_is_failure(self):
        assert trace_with([0.5] * 11 + [2.0]).status() == "F"

    def test_short_or_diverged_is_failure(self):
        assert trace_with([0.5] * 5).status() == "F"
        assert trace_with([0.5] * 12, diverged=True).status() == "F"
        assert trace_with([0.5] * 11 + [math.inf]).status() == "F"

    def test_max_cond(self):
        trace = RunTrace(records=[IterationRecord(k=0, residual_norm=1.0, cond_F=3.0),
                                  IterationRecord(k=1, residual_norm=0.5, cond_F=7.0)])
        assert trace.max_cond == 7.0
        assert trace.residual_norms.tolist() == [1.0, 0.5]


class TestHarnessConfigs:
    """Tests for RunConfig, CompareConfig and SweepConfig."""

    def test_run_label(self, problem_block):
        config = RunConfig.from_dict({"problem": problem_block, "solver": {"strategy": "tsvd"}})
        assert config.run_label == "linear_toy-tsvd"
        assert config.plots and not config.parquet
        labelled = RunConfig.from_dict({"problem": problem_block, "label": "mine"})
        assert labelled.run_label == "mine"

    def test_run_requires_problem(self):
        with pytest.raises(ConfigValidationError) as info:
            RunConfig.from_dict({"solver": {}})
        assert "problem" in str(info.value)

    def test_compare_valid(self, problem_block):
        config = CompareConfig.from_dict({
            "problem": problem_block,
            "runs": [
                {"label": "aa", "solver": {"strategy": "aa"}},
                {"label": "faa", "solver": {"strategy": "faa"}, "problem": problem_block},
            ],
        })
        assert [run.label for run in config.runs] == ["aa", "faa"]

    @pytest.mark.parametrize("runs,message", [
        ([{"label": "aa", "solver": {}}], "at least 2"),
        ([{"label": "x", "solver": {}}, {"label": "x", "solver": {}}], "unique"),
        ([{"label": "a", "solver": {}},
          {"label": "b", "solver": {}, "problem": {"name": "nlh"}}], "shared problem"),
    ])
    def test_compare_invalid(self, problem_block, runs, message):
        with pytest.raises(ConfigValidationError) as info:
            CompareConfig.from_dict({"problem": problem_block, "runs": runs})
        assert message in str(info.value)

    def test_sweep_valid(self, problem_block):
        config = SweepConfig.from_dict({"problem": problem_block,
                                        "grid": {"cs": [0.1, 0.4], "m": [1, 5]}})
        assert config.workers == 1
        assert not config.plots

    @pytest.mark.parametrize("grid,message", [
        ({}, "empty"),
        ({"cs": []}, "empty"),
        ({"tol": [1e-8]}, "unknown sweep axis"),
    ])
    def test_sweep_invalid(self, problem_block, grid, message):
        with pytest.raises(ConfigValidationError) as info:
            SweepConfig.from_dict({"problem": problem_block, "grid": grid})
        assert message in str(info.value)
