"""
Single-run harness: solve one configured problem and write its artifacts.
"""

import logging
import math
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from faapy.accelerator import solve
from faapy.exceptions import ConfigValidationError, Diverged, MaxIters
from faapy.harness.svg import line_chart, raster_chart
from faapy.models.config import Strategy
from faapy.models.run import RunConfig
from faapy.models.trace import RunTrace
from faapy.problems import get_problem
from faapy.schema import SCHEMA_VERSION
from faapy.storage import LocalArtifactStore, trace_frame

logger = logging.getLogger("faapy.harness.runner")

EXIT_CONVERGED = 0
EXIT_CONFIG_ERROR = 1
EXIT_MAX_ITERS = 2
EXIT_DIVERGED = 3

TRACE_CSV = "trace.csv"
TRACE_PARQUET = "trace.parquet"
SUMMARY_JSON = "summary.json"
RESIDUAL_SVG = "residual.svg"
CONDITION_SVG = "condition.svg"
COLUMNS_SVG = "columns.svg"

# cond_F holds the Frobenius condition for AA and FAA, the kept singular value ratio for TSVD
COND_FROBENIUS = "frobenius"
COND_SIGMA_RATIO = "sigma_ratio"
COND_LABELS = {COND_FROBENIUS: "cond(F)", COND_SIGMA_RATIO: "sigma_1/sigma_s"}


@dataclass
class RunArtifacts:
    """Files and outcome of one run."""

    label: str
    directory: str
    trace: RunTrace
    summary: Dict[str, Any]
    exit_code: int
    csv_path: str
    summary_path: str
    parquet_path: Optional[str] = None
    plot_paths: List[str] = field(default_factory=list)


def condition_metric(strategy: Any) -> str:
    """Name of the quantity a strategy records as cond_F."""
    return COND_SIGMA_RATIO if strategy == Strategy.TSVD else COND_FROBENIUS


def safe_label(label: str) -> str:
    """Directory-safe form of a run label."""
    cleaned = re.sub(r"[^A-Za-z0-9._=+-]+", "_", label).strip("._")
    return cleaned or "run"


def _finite_or_none(value: Optional[float]) -> Optional[float]:
    if value is None or not math.isfinite(value):
        return None
    return float(value)


def build_summary(config: RunConfig, solver: Dict[str, Any], trace: RunTrace,
                  beta_star: Optional[float], error: Optional[str] = None) -> Dict[str, Any]:
    """Summary document of a run; final_residual equals the last CSV row."""
    sigmas = [r.sigma_min for r in trace.records if r.sigma_min is not None]
    return {
        "schema_version": SCHEMA_VERSION,
        "label": config.run_label,
        "problem": config.problem.to_dict(),
        "solver": solver,
        "status": trace.status(),
        "converged": trace.converged,
        "diverged": trace.diverged,
        "iterations": trace.iters,
        "final_residual": _finite_or_none(trace.final_residual),
        "max_cond_F": _finite_or_none(trace.max_cond) or 0.0,
        "cond_metric": condition_metric(solver["strategy"]),
        "min_sigma": min(sigmas) if sigmas else None,
        "beta_star": beta_star,
        "error": error,
    }


def write_plots(store: LocalArtifactStore, directory: str, label: str,
                trace: RunTrace, kappa: Optional[float] = None,
                metric: str = COND_FROBENIUS) -> List[str]:
    ks = [r.k for r in trace.records]
    paths = [
        store.write_file(store.join_path(directory, RESIDUAL_SVG), line_chart(
            {label: (ks, [r.residual_norm for r in trace.records])},
            title=f"{label}: residual", y_label="||w||")),
        store.write_file(store.join_path(directory, CONDITION_SVG), line_chart(
            {label: (ks, [r.cond_F for r in trace.records])},
            title=f"{label}: condition", y_label=COND_LABELS[metric],
            reference_lines={"kappa": kappa} if kappa else None)),
        store.write_file(store.join_path(directory, COLUMNS_SVG), raster_chart(
            [r.mask_string for r in trace.records], title=f"{label}: columns used")),
    ]
    return paths


def run_single(config: RunConfig, store: Optional[LocalArtifactStore] = None,
               directory: Optional[str] = None) -> RunArtifacts:
    """
    Solve one configured problem and write its artifacts.

    Args:
        config: Validated run configuration.
        store: Artifact store; defaults to one rooted at config.output_dir.
        directory: Run directory relative to the store; defaults to the label.

    Returns:
        RunArtifacts. exit_code is 0 (converged), 2 (iteration budget) or 3 (diverged).

    Raises:
        ConfigValidationError: If the problem parameters or beta-star resolution are invalid.
        UnknownProblemError: If the problem is not registered.
    """
    store = store or LocalArtifactStore(config.output_dir)
    label = config.run_label
    problem = get_problem(config.problem.name, config.problem.params)
    beta_star = problem.beta_star
    try:
        solver = config.solver.resolve_beta(beta_star)
    except ValueError as e:
        raise ConfigValidationError(str(e))
    directory = store.create_directory(directory or safe_label(label))

    error = None
    try:
        trace = solve(problem, solver)
        exit_code = EXIT_CONVERGED
    except MaxIters as e:
        trace, exit_code, error = e.trace, EXIT_MAX_ITERS, str(e)
    except Diverged as e:
        trace, exit_code, error = e.trace, EXIT_DIVERGED, str(e)

    summary = build_summary(config, solver.to_dict(), trace, beta_star, error)
    csv_path = store.write_artifact(store.join_path(directory, TRACE_CSV), trace_frame(trace))
    summary_path = store.write_artifact(store.join_path(directory, SUMMARY_JSON), summary)

    artifacts = RunArtifacts(label=label, directory=directory, trace=trace, summary=summary,
                             exit_code=exit_code, csv_path=csv_path, summary_path=summary_path)
    if config.parquet:
        artifacts.parquet_path = store.write_artifact(
            store.join_path(directory, TRACE_PARQUET), trace_frame(trace, extended=True))
    if config.plots:
        kappa = {Strategy.FAA: solver.kappa_bar, Strategy.TSVD: solver.effective_tsvd_kappa}.get(
            solver.strategy)
        artifacts.plot_paths = write_plots(store, directory, label, trace, kappa,
                                           summary["cond_metric"])

    logger.info(f"{label}: {summary['status']} after {trace.iters} records, "
                f"artifacts in {directory}")
    return artifacts
