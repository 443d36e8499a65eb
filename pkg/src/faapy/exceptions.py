"""
Exceptions for the faapy package.

This module defines custom exceptions used throughout the package.
"""

from typing import Any, Optional


class FaaError(Exception):
    """Base exception for all faapy errors."""
    pass


class LinalgError(FaaError):
    """Base exception for dense linear-algebra kernel failures."""
    pass


class NumericalBreakdown(LinalgError):
    """
    Exception raised when a factorization meets a zero or non-finite column.

    `column` is set when the column lies exactly in the span of the
    columns before it.
    """

    def __init__(self, message: str, column: Optional[int] = None):
        super().__init__(message)
        self.column = column


class SingularR(LinalgError):
    """Exception raised when a triangular factor has a (numerically) zero diagonal entry."""
    pass


class NoConvergence(LinalgError):
    """Exception raised when an iterative kernel exceeds its sweep budget."""
    pass


class SolverError(FaaError):
    """Base exception for fixed-point driver errors."""

    def __init__(self, message: str, trace: Optional[Any] = None):
        super().__init__(message)
        self.trace = trace


class ZeroResidual(SolverError):
    """Exception raised when a gain is requested for an already converged residual."""
    pass


class Diverged(SolverError):
    """Exception raised when the residual norm blows up or becomes non-finite."""
    pass


class MaxIters(SolverError):
    """Exception raised when the iteration budget is exhausted before convergence."""
    pass


class ProblemError(FaaError):
    """Base exception for fixed-point problem errors."""
    pass


class SingularSystem(ProblemError):
    """Exception raised when an inner linear solve of a problem map breaks down."""
    pass


class UnknownProblemError(ProblemError):
    """Exception raised when a problem name is not registered."""
    pass


class ConfigError(FaaError):
    """Base exception for run configuration errors."""
    pass


class ConfigValidationError(ConfigError):
    """Exception raised when a run configuration fails validation."""
    pass


class StorageError(FaaError):
    """Base exception for artifact storage errors."""
    pass


class FileReadError(StorageError):
    """Exception raised when a file cannot be read."""
    pass


class FileWriteError(StorageError):
    """Exception raised when a file cannot be written."""
    pass
