"""
Parameter sweeps: one run per grid point, written under a common directory
with an index document.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from faapy.exceptions import FaaError
from faapy.harness.runner import EXIT_CONFIG_ERROR, run_single, safe_label
from faapy.models.config import SolverConfig
from faapy.models.run import SWEEP_AXES, RunConfig, SweepConfig
from faapy.schema import SCHEMA_VERSION
from faapy.storage import LocalArtifactStore

logger = logging.getLogger("faapy.harness.sweep")

INDEX_JSON = "index.json"


@dataclass
class SweepReport:
    """Index of a finished sweep."""

    directory: str
    index: Dict[str, Any]

    @property
    def entries(self) -> List[Dict[str, Any]]:
        return self.index["runs"]


def grid_points(grid: Dict[str, List[Any]]) -> List[Dict[str, Any]]:
    """Cartesian product of the grid axes, in axis order."""
    axes = list(grid)
    return [dict(zip(axes, values)) for values in itertools.product(*(grid[a] for a in axes))]


def point_label(point: Dict[str, Any]) -> str:
    return safe_label("_".join(f"{axis}={value}" for axis, value in point.items()))


def point_solver(base: SolverConfig, point: Dict[str, Any]) -> SolverConfig:
    """
    Base solver configuration with the grid values substituted.

    Raises:
        ConfigValidationError: If the combination is invalid.
    """
    data = base.to_dict()
    for axis, value in point.items():
        data[SWEEP_AXES[axis]] = value
    return SolverConfig.from_dict(data)


def _run_point(config: SweepConfig, store: LocalArtifactStore, directory: str,
               point: Dict[str, Any]) -> Dict[str, Any]:
    label = point_label(point)
    entry: Dict[str, Any] = {"point": point, "label": label}
    try:
        run_config = RunConfig(problem=config.problem, solver=point_solver(config.solver, point),
                               label=label, plots=config.plots)
        artifacts = run_single(run_config, store, store.join_path(directory, label))
    except FaaError as e:
        logger.warning(f"Sweep point {label} failed: {e}")
        entry.update({"exit_code": EXIT_CONFIG_ERROR, "error": str(e), "summary": None})
        return entry
    entry.update({"exit_code": artifacts.exit_code, "directory": artifacts.directory,
                  "summary": artifacts.summary})
    return entry


def run_sweep(config: SweepConfig, store: Optional[LocalArtifactStore] = None) -> SweepReport:
    """
    Run every grid point and write index.json.

    Points run on `config.workers` threads; each writes to its own
    directory. Failed points are recorded in the index and the sweep continues.
    """
    store = store or LocalArtifactStore(config.output_dir)
    directory = store.create_directory(safe_label(config.label or f"sweep-{config.problem.name}"))
    points = grid_points(config.grid)
    logger.info(f"Sweeping {len(points)} points over {', '.join(config.grid)} "
                f"with {config.workers} worker(s)")

    if config.workers == 1:
        entries = [_run_point(config, store, directory, point) for point in points]
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            entries = list(pool.map(lambda p: _run_point(config, store, directory, p), points))

    index = {
        "schema_version": SCHEMA_VERSION,
        "problem": config.problem.to_dict(),
        "solver": config.solver.to_dict(),
        "axes": list(config.grid),
        "runs": entries,
    }
    store.write_artifact(store.join_path(directory, INDEX_JSON), index)
    return SweepReport(directory=directory, index=index)
