"""
faapy - Filtered Anderson acceleration for fixed-point iterations.

Anderson acceleration whose least-squares history is filtered for column
length and direction so the condition number stays bounded, together with a
truncated-SVD baseline, PDE benchmark problems and a run harness.
"""

__version__ = '0.1.0'
__schema_version__ = '1.0'     # Version of the bundled config and summary schemas

# Setup package-level logger
import logging

logger = logging.getLogger("faapy")
logger.setLevel(logging.INFO)

# Import exceptions
from faapy.exceptions import (
    FaaError,
    LinalgError,
    NumericalBreakdown,
    SingularR,
    NoConvergence,
    SolverError,
    ZeroResidual,
    Diverged,
    MaxIters,
    ProblemError,
    SingularSystem,
    UnknownProblemError,
    ConfigError,
    ConfigValidationError,
    StorageError,
    FileReadError,
    FileWriteError,
)

# Import models
from faapy.models import (
    FilterParams,
    FilterOrder,
    Strategy,
    DepthSchedule,
    SolverConfig,
    IterationRecord,
    RunTrace,
    RunConfig,
    CompareConfig,
    SweepConfig,
)

# Import kernels and the driver
from faapy.linalg import economy_qr, least_squares_solve, frobenius_cond, small_svd
from faapy.filtering import condition_filter, tsvd_solve
from faapy.accelerator import solve, dynamic_cs, effective_depth

# Import problems
from faapy.problems import (
    FixedPointProblem,
    get_problem,
    list_problems,
    register_problem,
)

# Import harness
from faapy.harness import run_single, run_compare, run_sweep

__all__ = [
    # Version information
    '__version__',
    '__schema_version__',

    # Exceptions
    'FaaError',
    'LinalgError',
    'NumericalBreakdown',
    'SingularR',
    'NoConvergence',
    'SolverError',
    'ZeroResidual',
    'Diverged',
    'MaxIters',
    'ProblemError',
    'SingularSystem',
    'UnknownProblemError',
    'ConfigError',
    'ConfigValidationError',
    'StorageError',
    'FileReadError',
    'FileWriteError',

    # Models
    'FilterParams',
    'FilterOrder',
    'Strategy',
    'DepthSchedule',
    'SolverConfig',
    'IterationRecord',
    'RunTrace',
    'RunConfig',
    'CompareConfig',
    'SweepConfig',

    # Numerics
    'economy_qr',
    'least_squares_solve',
    'frobenius_cond',
    'small_svd',
    'condition_filter',
    'tsvd_solve',
    'solve',
    'dynamic_cs',
    'effective_depth',

    # Problems
    'FixedPointProblem',
    'get_problem',
    'list_problems',
    'register_problem',

    # Harness
    'run_single',
    'run_compare',
    'run_sweep',
]


def get_version_info():
    """
    Get version information.

    Returns:
        Dictionary containing the package version and the config schema version.
    """
    return {
        'version': __version__,
        'schema_version': __schema_version__,
    }
