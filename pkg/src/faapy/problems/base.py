"""
Base interface of fixed-point problems.

A problem is a deterministic, dimension-preserving map g together with an
initial iterate and optional metadata (known solution, beta*). Problem
classes register themselves by name so that run configurations can select
them.
"""

import abc
import logging
from typing import Any, Dict, List, Optional, Type

import numpy as np

from faapy.exceptions import SingularSystem, UnknownProblemError
from faapy.models.base import BaseModel

logger = logging.getLogger("faapy.problems.base")


class FixedPointProblem(abc.ABC):
    """
    Abstract base class for fixed-point maps x -> g(x).
    """

    # Problem name (used for registration and lookup)
    problem_name: str = None

    # One-line description shown by `faa problems`
    description: str = ""

    # Pydantic model of the parameter block
    params_model: Type[BaseModel] = None

    # Whether iterates are complex
    is_complex: bool = False

    # Largest relaxation parameter with a contraction guarantee, if known
    beta_star: Optional[float] = None

    def __init__(self, params: Optional[BaseModel] = None):
        if params is None and self.params_model is not None:
            params = self.params_model()
        self.params = params

    @classmethod
    def from_params(cls, params: BaseModel) -> "FixedPointProblem":
        """Build the problem from a validated parameter block."""
        return cls(params)

    @property
    @abc.abstractmethod
    def dimension(self) -> int:
        """Length of the iterate."""
        pass

    @abc.abstractmethod
    def map(self, x: np.ndarray) -> np.ndarray:
        """
        Evaluate g(x).

        Args:
            x: Iterate of length `dimension`.

        Returns:
            g(x), same length.

        Raises:
            SingularSystem: If an inner linear solve breaks down.
        """
        pass

    @property
    def solution(self) -> Optional[np.ndarray]:
        """Known fixed point, if any."""
        return None

    def initial_guess(self) -> np.ndarray:
        dtype = np.complex128 if self.is_complex else np.float64
        return np.zeros(self.dimension, dtype=dtype)

    def __call__(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        if x.shape != (self.dimension,):
            raise ValueError(f"{self.problem_name}: expected iterate of length {self.dimension}, "
                             f"got shape {x.shape}")
        result = self.map(x)
        if not np.all(np.isfinite(result)):
            raise SingularSystem(f"{self.problem_name}: map produced non-finite values")
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.dimension})"


# Registry of available problems
_problem_registry: Dict[str, Type[FixedPointProblem]] = {}


def register_problem(problem_class: Type[FixedPointProblem]) -> Type[FixedPointProblem]:
    """
    Register a problem class.

    This can be used as a decorator on problem classes.

    Raises:
        ValueError: If the problem class has no problem_name.
    """
    if not problem_class.problem_name:
        raise ValueError(f"Problem class {problem_class.__name__} must define problem_name")

    _problem_registry[problem_class.problem_name] = problem_class
    return problem_class


def get_problem_class(name: str) -> Type[FixedPointProblem]:
    """
    Get a problem class by name.

    Raises:
        UnknownProblemError: If no problem is registered under the name.
    """
    if name not in _problem_registry:
        known = ", ".join(sorted(_problem_registry))
        raise UnknownProblemError(f"Unknown problem '{name}' (available: {known})")
    return _problem_registry[name]


def get_problem(name: str, params: Optional[Dict[str, Any]] = None) -> FixedPointProblem:
    """
    Build a registered problem from a raw parameter block.

    Args:
        name: Registered problem name.
        params: Parameter overrides; validated against the problem's model.

    Returns:
        The problem instance.

    Raises:
        UnknownProblemError: If the name is not registered.
        ConfigValidationError: If the parameter block is invalid.
    """
    problem_class = get_problem_class(name)
    block = problem_class.params_model.from_dict(params or {})
    logger.debug(f"Building problem {name} with {block.to_dict()}")
    return problem_class.from_params(block)


def list_problems() -> List[Type[FixedPointProblem]]:
    return [_problem_registry[name] for name in sorted(_problem_registry)]
