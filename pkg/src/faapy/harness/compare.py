"""
Side-by-side comparison of several strategies on one problem.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import pandas as pd

from faapy.harness.runner import COND_FROBENIUS, COND_LABELS, RunArtifacts, run_single, safe_label
from faapy.harness.svg import line_chart
from faapy.models.run import CompareConfig, RunConfig
from faapy.storage import LocalArtifactStore, trace_frame

logger = logging.getLogger("faapy.harness.compare")

COMPARE_CSV = "compare.csv"
COMPARE_SUMMARY_CSV = "compare_summary.csv"
COMPARE_JSON = "compare.json"
COMPARE_COLUMNS = ["residual", "theta", "cond_F", "m_k", "kept_mask"]


@dataclass
class CompareReport:
    """Artifacts of a comparison."""

    directory: str
    runs: List[RunArtifacts]
    table: pd.DataFrame
    summary: pd.DataFrame
    plot_paths: List[str] = field(default_factory=list)


def combined_table(runs: List[RunArtifacts]) -> pd.DataFrame:
    """
    One column group per run, aligned on k.

    Columns are named "<label>.<quantity>"; runs that stopped early leave
    empty cells.
    """
    frames = []
    for run in runs:
        frame = trace_frame(run.trace).set_index("k")[COMPARE_COLUMNS]
        frame.columns = [f"{run.label}.{column}" for column in COMPARE_COLUMNS]
        frames.append(frame)
    table = pd.concat(frames, axis=1, join="outer").sort_index()
    table.index.name = "k"
    return table.reset_index()


def summary_table(runs: List[RunArtifacts]) -> pd.DataFrame:
    return pd.DataFrame([
        {
            "label": run.label,
            "strategy": run.summary["solver"]["strategy"],
            "status": run.summary["status"],
            "iterations": run.summary["iterations"],
            "final_residual": run.summary["final_residual"],
            "max_cond_F": run.summary["max_cond_F"],
            "cond_metric": run.summary["cond_metric"],
        }
        for run in runs
    ])


def run_compare(config: CompareConfig, store: Optional[LocalArtifactStore] = None) -> CompareReport:
    """
    Run every strategy block on the shared problem and write the combined report.

    Individual runs that hit the iteration budget or diverge are reported,
    not raised.

    Raises:
        ConfigValidationError: If the problem block is invalid.
    """
    store = store or LocalArtifactStore(config.output_dir)
    directory = store.create_directory(safe_label(config.label or f"compare-{config.problem.name}"))

    runs = []
    for entry in config.runs:
        run_config = RunConfig(problem=config.problem, solver=entry.solver, label=entry.label,
                               plots=False)
        runs.append(run_single(run_config, store, store.join_path(directory, safe_label(entry.label))))

    table = combined_table(runs)
    summary = summary_table(runs)
    store.write_artifact(store.join_path(directory, COMPARE_CSV), table)
    store.write_artifact(store.join_path(directory, COMPARE_SUMMARY_CSV), summary)
    store.write_artifact(store.join_path(directory, COMPARE_JSON), {
        "problem": config.problem.to_dict(),
        "runs": [run.summary for run in runs],
    })

    report = CompareReport(directory=directory, runs=runs, table=table, summary=summary)
    if config.plots:
        report.plot_paths = _write_plots(store, directory, config.problem.name, runs)

    for row in summary.itertuples():
        logger.info(f"{row.label}: {row.status} ({row.iterations} records)")
    return report


def _write_plots(store: LocalArtifactStore, directory: str, title: str,
                 runs: List[RunArtifacts]) -> List[str]:
    residuals: Dict[str, tuple] = {}
    conditions: Dict[str, tuple] = {}
    for run in runs:
        ks = [r.k for r in run.trace.records]
        residuals[run.label] = (ks, [r.residual_norm for r in run.trace.records])
        metric = run.summary["cond_metric"]
        name = run.label if metric == COND_FROBENIUS else f"{run.label} ({COND_LABELS[metric]})"
        conditions[name] = (ks, [r.cond_F for r in run.trace.records])
    return [
        store.write_file(store.join_path(directory, "residual.svg"),
                         line_chart(residuals, title=f"{title}: residual", y_label="||w||")),
        store.write_file(store.join_path(directory, "condition.svg"),
                         line_chart(conditions, title=f"{title}: condition", y_label="cond(F)")),
    ]
