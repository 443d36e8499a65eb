"""
Command-line interface for faapy.

    faa run      one solve, flags or a JSON config (flags override file values)
    faa compare  several strategies on one problem, from a JSON config
    faa sweep    a parameter grid, from flags or a JSON config
    faa problems list the registered problems

Exit codes: 0 converged (or report written), 1 configuration error,
2 iteration budget exhausted, 3 diverged.
"""
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from faapy import __version__
from faapy.exceptions import ConfigError, FaaError, FileReadError, ProblemError, StorageError
from faapy.harness import EXIT_CONFIG_ERROR, run_compare, run_single, run_sweep
from faapy.models import CompareConfig, RunConfig, SweepConfig
from faapy.models.run import SWEEP_AXES
from faapy.problems import list_problems
from faapy.schema import SchemaValidator
from faapy.storage import LocalArtifactStore

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("faapy.cli")

STATUS_ICONS = {"converged": "✅", ">max": "⏳", "F": "❌"}


def _cs_value(text: str) -> Any:
    return text if text == "dynamic" else float(text)


def _beta_value(text: str) -> Any:
    return text if text == "beta-star" else float(text)


def _json_scalar(text: str) -> Any:
    """Parse a command-line value as JSON, falling back to the raw string."""
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _key_value(text: str) -> tuple:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"Expected key=value, got '{text}'")
    key, value = text.split("=", 1)
    return key.strip(), value.strip()


def _add_problem_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--problem", help="Registered problem name (see `faa problems`)")
    parser.add_argument("--param", action="append", type=_key_value, default=[],
                        metavar="KEY=VALUE", help="Problem parameter override (repeatable)")


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--strategy", choices=["aa", "faa", "tsvd", "none"],
                        help="Stabilization strategy; none is unaccelerated")
    parser.add_argument("--m", type=int, help="Maximum algorithmic depth")
    parser.add_argument("--cs", type=_cs_value, help="Angle filter parameter, or 'dynamic'")
    parser.add_argument("--kappa", type=float, help="Condition cap kappa_bar")
    parser.add_argument("--tsvd-kappa", type=float, help="Singular value ratio cap of TSVD")
    parser.add_argument("--beta", type=_beta_value, help="Relaxation parameter, or 'beta-star'")
    parser.add_argument("--order", choices=["length-first", "angle-first"], help="Filter order")
    parser.add_argument("--sharpen-cs", action="store_true", default=None,
                        help="Angle-first order: length filter uses the realized minimum sine")
    parser.add_argument("--depth-schedule", help="constant | multilevel:tau,m_early,m_late")
    parser.add_argument("--tol", type=float, help="Residual tolerance")
    parser.add_argument("--max-iters", type=int, help="Iteration budget")


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON configuration file")
    parser.add_argument("--out", help="Output directory (default: $FAAPY_OUTPUT_DIR or ./faa-runs)")
    parser.add_argument("--label", help="Run label (directory name)")
    parser.add_argument("--no-plots", action="store_true", help="Skip SVG plots")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")


class CommandLineParser(argparse.ArgumentParser):
    """Argument parser that reports bad flags as configuration errors instead of exiting."""

    def error(self, message: str):
        raise ConfigError(f"{self.prog}: {message}")


def setup_argparse() -> argparse.ArgumentParser:
    """Set up argument parsing for the CLI."""
    parser = CommandLineParser(
        prog="faa",
        description="Filtered Anderson acceleration: runs, comparisons and sweeps",
        epilog=f"faapy version {__version__}",
    )
    parser.add_argument('--version', action='version', version=f"faapy {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    run_parser = subparsers.add_parser("run", help="Solve one problem")
    _add_problem_flags(run_parser)
    _add_solver_flags(run_parser)
    _add_output_flags(run_parser)
    run_parser.add_argument("--parquet", action="store_true", default=None,
                            help="Also write the extended trace as Parquet")

    compare_parser = subparsers.add_parser("compare", help="Compare strategies on one problem")
    _add_output_flags(compare_parser)

    sweep_parser = subparsers.add_parser("sweep", help="Run a parameter grid")
    _add_problem_flags(sweep_parser)
    _add_solver_flags(sweep_parser)
    _add_output_flags(sweep_parser)
    sweep_parser.add_argument("--grid", action="append", type=_key_value, default=[],
                              metavar="AXIS=V1,V2,...",
                              help=f"Grid axis values (repeatable; axes: {', '.join(SWEEP_AXES)})")
    sweep_parser.add_argument("--workers", type=int, help="Concurrent runs")

    subparsers.add_parser("problems", help="List registered problems")
    return parser


def load_document(path: Optional[str]) -> Dict[str, Any]:
    """
    Read a JSON configuration file; no path gives an empty document.

    Raises:
        FileReadError: If the file cannot be read.
        ConfigError: If the file is not a JSON object.
    """
    if not path:
        return {}
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except OSError as e:
        raise FileReadError(f"Failed to read config {path}: {e}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config {path} is not valid JSON: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"Config {path} must contain a JSON object")
    return data


def _apply_problem_flags(document: Dict[str, Any], args: argparse.Namespace) -> None:
    if args.problem:
        if document.get("problem", {}).get("name") not in (None, args.problem):
            document["problem"] = {"name": args.problem}
        document.setdefault("problem", {})["name"] = args.problem
    if args.param:
        problem = document.setdefault("problem", {})
        params = problem.setdefault("params", {})
        for key, value in args.param:
            params[key] = _json_scalar(value)


def _apply_solver_flags(document: Dict[str, Any], args: argparse.Namespace) -> None:
    overrides = {
        "strategy": args.strategy,
        "m": args.m,
        "cs": args.cs,
        "kappa_bar": args.kappa,
        "tsvd_kappa": args.tsvd_kappa,
        "beta": args.beta,
        "order": args.order,
        "sharpen_cs": args.sharpen_cs,
        "depth_schedule": args.depth_schedule,
        "tol": args.tol,
        "max_iters": args.max_iters,
    }
    solver = document.setdefault("solver", {})
    for key, value in overrides.items():
        if value is not None:
            solver[key] = value


def _apply_output_flags(document: Dict[str, Any], args: argparse.Namespace) -> None:
    if args.out:
        document["output_dir"] = args.out
    if args.label:
        document["label"] = args.label
    if args.no_plots:
        document["plots"] = False


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """
    Merge the config file and the flags into a validated RunConfig.

    Raises:
        ConfigError: If the merged document is invalid; the message names the key.
    """
    document = load_document(args.config)
    _apply_problem_flags(document, args)
    _apply_solver_flags(document, args)
    _apply_output_flags(document, args)
    if args.parquet:
        document["parquet"] = True
    SchemaValidator().assert_valid(document, "run")
    return RunConfig.from_dict(document)


def build_compare_config(args: argparse.Namespace) -> CompareConfig:
    if not args.config:
        raise ConfigError("compare needs --config with a problem block and at least 2 runs")
    document = load_document(args.config)
    _apply_output_flags(document, args)
    SchemaValidator().assert_valid(document, "compare")
    return CompareConfig.from_dict(document)


def build_sweep_config(args: argparse.Namespace) -> SweepConfig:
    document = load_document(args.config)
    _apply_problem_flags(document, args)
    _apply_solver_flags(document, args)
    _apply_output_flags(document, args)
    if args.grid:
        grid = document.setdefault("grid", {})
        for axis, values in args.grid:
            grid[axis] = [_json_scalar(v) for v in values.split(",") if v.strip()]
    document.setdefault("grid", {})
    if args.workers is not None:
        document["workers"] = args.workers
    SchemaValidator().assert_valid(document, "sweep")
    return SweepConfig.from_dict(document)


def handle_run(args: argparse.Namespace) -> int:
    """Handle the 'run' command."""
    try:
        config = build_run_config(args)
        artifacts = run_single(config, LocalArtifactStore(config.output_dir))
    except (ConfigError, ProblemError, StorageError) as e:
        print(f"❌ Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    summary = artifacts.summary
    icon = STATUS_ICONS.get(summary["status"], "❌")
    print(f"{icon} {artifacts.label}: {summary['status']} after {summary['iterations']} iterations, "
          f"final residual {summary['final_residual']}")
    print(f"📈 max cond_F: {summary['max_cond_F']:.3e}")
    print(f"📁 Artifacts: {artifacts.directory}")
    return artifacts.exit_code


def handle_compare(args: argparse.Namespace) -> int:
    """Handle the 'compare' command."""
    try:
        config = build_compare_config(args)
        report = run_compare(config, LocalArtifactStore(config.output_dir))
    except (ConfigError, ProblemError, StorageError) as e:
        print(f"❌ Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    print(f"✅ Compared {len(report.runs)} strategies on {config.problem.name}")
    for row in report.summary.itertuples():
        icon = STATUS_ICONS.get(row.status, "❌")
        print(f"   {icon} {row.label:<20} {row.status:<10} {row.iterations:>5} iterations, "
              f"max cond_F {row.max_cond_F:.3e}")
    print(f"📁 Report: {report.directory}")
    return 0


def handle_sweep(args: argparse.Namespace) -> int:
    """Handle the 'sweep' command."""
    try:
        config = build_sweep_config(args)
        report = run_sweep(config, LocalArtifactStore(config.output_dir))
    except (ConfigError, ProblemError, StorageError) as e:
        print(f"❌ Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    converged = sum(1 for entry in report.entries
                    if entry["summary"] and entry["summary"]["converged"])
    print(f"✅ Sweep finished: {len(report.entries)} runs, {converged} converged")
    for entry in report.entries:
        summary = entry["summary"]
        status = summary["status"] if summary else "error"
        print(f"   {STATUS_ICONS.get(status, '❌')} {entry['label']}: {status}")
    print(f"📁 Index: {report.directory}")
    return 0


def handle_problems(args: argparse.Namespace) -> int:
    """Handle the 'problems' command."""
    for problem_class in list_problems():
        defaults = problem_class.params_model().to_dict()
        print(f"📦 {problem_class.problem_name}: {problem_class.description}")
        print(f"   params: {json.dumps(defaults, sort_keys=True)}")
        if problem_class.beta_star is not None:
            print(f"   beta*: {problem_class.beta_star:.6f}")
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    parser = setup_argparse()
    try:
        args = parser.parse_args(argv)
    except ConfigError as e:
        logger.error(f"Invalid arguments: {e}")
        print(f"❌ Configuration error: {e}")
        return EXIT_CONFIG_ERROR

    if not args.command:
        parser.print_help()
        return 1

    if getattr(args, "verbose", False):
        logging.getLogger("faapy").setLevel(logging.DEBUG)

    handlers = {
        "run": handle_run,
        "compare": handle_compare,
        "sweep": handle_sweep,
        "problems": handle_problems,
    }
    try:
        return handlers[args.command](args)
    except FaaError as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"❌ {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
