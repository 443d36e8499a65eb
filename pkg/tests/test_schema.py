"""
Tests for the bundled configuration schemas.
"""
import pytest

from faapy.exceptions import ConfigValidationError
from faapy.schema import SCHEMA_FILES, SCHEMA_VERSION, SchemaValidator, load_schemas, validate_document


@pytest.fixture(scope="module")
def validator():
    return SchemaValidator()


@pytest.fixture
def run_document():
    return {
        "problem": {"name": "linear_toy", "params": {"n": 20, "rho": 0.9}},
        "solver": {"strategy": "faa", "m": 10, "cs": 0.4, "kappa_bar": 1e8,
                   "beta": "beta-star", "depth_schedule": "multilevel:1e-2,1,20"},
        "label": "toy",
        "plots": False,
    }


class TestLoading:
    """Tests for schema loading."""

    def test_every_kind_is_bundled(self):
        schemas = load_schemas()
        assert set(SCHEMA_FILES.values()) <= set(schemas)
        assert SCHEMA_VERSION == "1.0"

    def test_unknown_version(self):
        with pytest.raises(ConfigValidationError):
            load_schemas("0.9")

    def test_unknown_kind(self, validator):
        with pytest.raises(ValueError):
            validator.validate({}, "report")


class TestRunDocuments:
    """Tests for run configuration documents."""

    def test_valid(self, validator, run_document):
        assert validator.validate(run_document, "run") == []

    def test_missing_problem(self, validator):
        errors = validator.validate({"solver": {}}, "run")
        assert len(errors) == 1
        assert "'problem' is a required property" in errors[0]

    def test_error_names_nested_key(self, validator, run_document):
        run_document["solver"]["cs"] = 1.5
        errors = validator.validate(run_document, "run")
        assert errors
        assert all(error.startswith("Validation error at solver.cs") for error in errors)

    @pytest.mark.parametrize("solver", [
        {"strategy": "newton"},
        {"m": -1},
        {"m": 2.5},
        {"beta": 0},
        {"beta": "half"},
        {"kappa_bar": 0.5},
        {"tsvd_kappa": 1},
        {"order": "sideways"},
        {"depth_schedule": "multilevel:1e-2,1"},
        {"tol": 0},
        {"max_iters": 0},
        {"restart": True},
    ])
    def test_invalid_solver_blocks(self, validator, run_document, solver):
        run_document["solver"] = solver
        assert validator.validate(run_document, "run")

    def test_dynamic_cs_and_unaccelerated_strategy(self, validator, run_document):
        run_document["solver"] = {"strategy": "none", "cs": "dynamic"}
        assert validator.validate(run_document, "run") == []

    def test_unknown_top_level_key(self, validator, run_document):
        run_document["workers"] = 2
        errors = validator.validate(run_document, "run")
        assert any("workers" in error for error in errors)

    def test_assert_valid(self, validator, run_document):
        validator.assert_valid(run_document, "run")
        with pytest.raises(ConfigValidationError) as info:
            validate_document({"problem": {}}, "run")
        assert "Validation error at problem" in str(info.value)


class TestCompareAndSweepDocuments:
    """Tests for compare and sweep documents."""

    def test_compare(self, validator):
        document = {
            "problem": {"name": "nlh"},
            "runs": [
                {"label": "aa", "solver": {"strategy": "aa", "m": 20}},
                {"label": "faa", "solver": {"strategy": "faa", "m": 20, "cs": 0.1}},
            ],
        }
        assert validator.validate(document, "compare") == []
        document["runs"] = document["runs"][:1]
        assert validator.validate(document, "compare")

    def test_sweep(self, validator):
        document = {
            "problem": {"name": "quasilinear"},
            "grid": {"cs": [0.1, 0.4], "m": [10, 20], "strategy": ["faa", "tsvd"]},
            "workers": 2,
        }
        assert validator.validate(document, "sweep") == []

    @pytest.mark.parametrize("grid", [{}, {"cs": []}, {"tol": [1e-8]}, {"m": [1.5]}])
    def test_invalid_sweep_grid(self, validator, grid):
        document = {"problem": {"name": "quasilinear"}, "grid": grid}
        assert validator.validate(document, "sweep")

    def test_summary(self, validator):
        summary = {
            "schema_version": "1.0",
            "label": "toy",
            "problem": {"name": "linear_toy", "params": {}},
            "solver": {"strategy": "faa"},
            "status": ">max",
            "converged": False,
            "iterations": 501,
            "final_residual": None,
        }
        assert validator.validate(summary, "summary") == []
        summary["status"] = "stalled"
        assert validator.validate(summary, "summary")
