"""
Problems module for faapy.

Built-in fixed-point problems. Importing the package registers every
problem under its name.
"""

from faapy.problems.base import (
    FixedPointProblem,
    get_problem,
    get_problem_class,
    list_problems,
    register_problem,
)
from faapy.problems.grid import SquareGrid
from faapy.problems.helmholtz import NlhParams, NlhProblem, nlh_problem
from faapy.problems.plap import PLapParams, PLapProblem, plap_problem
from faapy.problems.quasilinear import (
    BETA_STAR,
    QuasilinearParams,
    QuasilinearProblem,
    quasilinear_problem,
)
from faapy.problems.toy import LinearToyParams, LinearToyProblem, linear_toy

__all__ = [
    'FixedPointProblem',
    'register_problem',
    'get_problem',
    'get_problem_class',
    'list_problems',
    'SquareGrid',
    'LinearToyParams',
    'LinearToyProblem',
    'linear_toy',
    'NlhParams',
    'NlhProblem',
    'nlh_problem',
    'QuasilinearParams',
    'QuasilinearProblem',
    'quasilinear_problem',
    'BETA_STAR',
    'PLapParams',
    'PLapProblem',
    'plap_problem',
]
