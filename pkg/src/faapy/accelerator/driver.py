"""
Anderson acceleration drivers.

One loop serves the three strategies. Iteration k evaluates the residual
w_{k+1} = g(x_k) - x_k, then:

- k = 0: damped fixed-point step x_1 = x_0 + beta w_1;
- k = 1: depth-one step with gamma from the normal equation
  f_1* f_1 gamma = f_1* w_2;
- k >= 2: the new column pair is prepended to the history, the window is
  cut to the effective depth and the coefficients come from the strategy
  (FAA: condition filter then QR solve, TSVD: truncated SVD, PlainAA:
  QR solve of the whole window).

Columns removed by a filter stay removed from the history.
"""

import logging
import time
from typing import Any, Optional, Tuple

import numpy as np

from faapy.accelerator.history import ColumnHistory
from faapy.accelerator.schedules import CS_UPPER, DepthController, dynamic_cs
from faapy.exceptions import (
    ConfigValidationError,
    Diverged,
    LinalgError,
    MaxIters,
    SingularSystem,
    ZeroResidual,
)
from faapy.filtering import condition_filter, tsvd_factor
from faapy.linalg import economy_qr, frobenius_cond_from_qr, least_squares_solve
from faapy.models.config import SolverConfig, Strategy
from faapy.models.trace import IterationRecord, RunTrace

logger = logging.getLogger("faapy.accelerator.driver")

DIVERGENCE_LEVEL = 1e15


def residual(g_output: np.ndarray, x: np.ndarray) -> np.ndarray:
    """w = g(x) - x."""
    g_output = np.asarray(g_output)
    x = np.asarray(x)
    if g_output.shape != x.shape:
        raise ValueError(f"g(x) has shape {g_output.shape} but x has shape {x.shape}")
    return g_output - x


def gain(F: Optional[np.ndarray], gamma: Optional[np.ndarray], w: np.ndarray) -> float:
    """
    Optimization gain ||F gamma - w|| / ||w||.

    An empty coefficient vector (no least-squares solve) gives 1.

    Raises:
        ZeroResidual: If ||w|| = 0.
    """
    w = np.asarray(w)
    w_norm = np.linalg.norm(w)
    if w_norm == 0.0:
        raise ZeroResidual("Optimization gain is undefined for a zero residual")
    if gamma is None or np.size(gamma) == 0:
        return 1.0
    return float(np.linalg.norm(np.asarray(F) @ np.asarray(gamma) - w) / w_norm)


def aa_update(
    x: np.ndarray,
    w: np.ndarray,
    E: Optional[np.ndarray],
    F: Optional[np.ndarray],
    gamma: Optional[np.ndarray],
    beta: float,
) -> np.ndarray:
    """
    x_next = x + beta w - (E + beta F) gamma.

    With no columns (or an empty gamma) this is the damped fixed-point step.
    """
    x = np.asarray(x)
    w = np.asarray(w)
    step = x + beta * w
    if gamma is None or np.size(gamma) == 0:
        return step
    gamma = np.asarray(gamma)
    if E.shape[1] != gamma.shape[0] or F.shape[1] != gamma.shape[0]:
        raise ValueError(
            f"gamma has {gamma.shape[0]} entries for {E.shape[1]} columns of E "
            f"and {F.shape[1]} of F"
        )
    return step - (E + beta * F) @ gamma


class _Step:
    """Coefficients of one update and the telemetry that goes with them."""

    def __init__(self, E: Optional[np.ndarray] = None, F: Optional[np.ndarray] = None,
                 gamma: Optional[np.ndarray] = None, cond_F: float = 0.0):
        self.E = E
        self.F = F
        self.gamma = gamma
        self.cond_F = cond_F
        self.kept_mask: list = [] if F is None else [True] * F.shape[1]
        self.sigma_min: Optional[float] = None
        self.dropped_length = 0
        self.dropped_angle = 0
        self.tsvd_rank: Optional[int] = None

    @property
    def depth(self) -> int:
        return 0 if self.gamma is None else int(np.size(self.gamma))


def _depth_one_step(E: np.ndarray, F: np.ndarray, w: np.ndarray) -> _Step:
    f = F[:, 0]
    denominator = np.vdot(f, f).real
    if denominator == 0.0:
        logger.debug("Residual difference vanished at k = 1; taking a fixed-point step")
        return _Step()
    gamma = np.array([np.vdot(f, w) / denominator])
    # ||f|| * ||1 / ||f|||| for a single column
    return _Step(E=E, F=F, gamma=gamma, cond_F=1.0)


def _plain_step(E: np.ndarray, F: np.ndarray, w: np.ndarray) -> _Step:
    qr = economy_qr(F)
    gamma = least_squares_solve(qr, w)
    return _Step(E=E, F=F, gamma=gamma, cond_F=frobenius_cond_from_qr(F, qr))


def _filtered_step(E: np.ndarray, F: np.ndarray, w: np.ndarray, config: SolverConfig,
                   c_s: float) -> _Step:
    outcome = condition_filter(E, F, config.filter_params(c_s))
    gamma = least_squares_solve(outcome.qr, w)
    step = _Step(E=outcome.E, F=outcome.F, gamma=gamma,
                 cond_F=frobenius_cond_from_qr(outcome.F, outcome.qr))
    step.kept_mask = [bool(keep) for keep in outcome.kept_mask]
    step.sigma_min = outcome.sigma_min
    step.dropped_length = outcome.dropped_length
    step.dropped_angle = outcome.dropped_angle
    if outcome.new_depth == 1 and F.shape[1] > 1:
        logger.debug(f"Filter kept only the newest of {F.shape[1]} columns")
    return step


def _tsvd_step(E: np.ndarray, F: np.ndarray, w: np.ndarray, config: SolverConfig) -> _Step:
    truncated = tsvd_factor(F, config.effective_tsvd_kappa)
    step = _Step(E=E, F=F, gamma=truncated.solve(w), cond_F=truncated.ratio)
    step.tsvd_rank = truncated.rank
    return step


def _prepare(problem: Any, config: SolverConfig,
             x0: Optional[np.ndarray]) -> Tuple[SolverConfig, np.ndarray]:
    try:
        config = config.resolve_beta(getattr(problem, "beta_star", None))
    except ValueError as e:
        raise ConfigValidationError(str(e)) from e

    if x0 is None:
        x0 = problem.initial_guess()
    dtype = np.complex128 if getattr(problem, "is_complex", False) or np.iscomplexobj(x0) \
        else np.float64
    x = np.array(x0, dtype=dtype, copy=True)
    dimension = getattr(problem, "dimension", x.shape[0])
    if x.shape != (dimension,):
        raise ValueError(f"Initial iterate has shape {x.shape}, problem dimension is {dimension}")
    return config, x


def solve(problem: Any, config: SolverConfig, x0: Optional[np.ndarray] = None) -> RunTrace:
    """
    Run the accelerated fixed-point iteration.

    Args:
        problem: Callable fixed-point map g; FixedPointProblem instances also
            supply the initial iterate, the scalar field and beta*.
        config: Solver configuration. beta = "beta-star" is resolved
            against the problem.
        x0: Initial iterate; defaults to problem.initial_guess().

    Returns:
        Converged RunTrace.

    Raises:
        Diverged: If ||w|| exceeds 1e15, turns non-finite, or the
            least-squares kernels break down. Carries the partial trace.
        MaxIters: If max_iters updates did not reach the tolerance.
            Carries the partial trace.
        ConfigValidationError: If beta-star is requested from a problem without one.
    """
    config, x = _prepare(problem, config, x0)
    beta = config.beta_value
    trace = RunTrace()
    depth = DepthController(config)
    history = ColumnHistory(depth.capacity)

    name = getattr(problem, "problem_name", type(problem).__name__)
    logger.info(f"Solving {name} (n = {x.shape[0]}) with strategy {config.strategy.value}, "
                f"m = {config.m}, beta = {beta:.6g}")

    x_prev: Optional[np.ndarray] = None
    w_prev: Optional[np.ndarray] = None

    for k in range(config.max_iters + 1):
        started = time.perf_counter()
        try:
            w = residual(problem(x), x)
        except SingularSystem as e:
            trace.diverged = True
            trace.final_x = x
            logger.info(f"{name}: map evaluation failed at k = {k}: {e}")
            raise Diverged(f"Map evaluation failed at iteration {k}: {e}", trace=trace) from e
        w_norm = float(np.linalg.norm(w))
        if config.dynamic_cs:
            c_s = dynamic_cs(w_norm) if np.isfinite(w_norm) else CS_UPPER
        else:
            c_s = float(config.cs)

        if not np.isfinite(w_norm) or w_norm > DIVERGENCE_LEVEL:
            trace.records.append(IterationRecord(
                k=k, residual_norm=w_norm if np.isfinite(w_norm) else float("inf"),
                m_k=len(history), cs_used=c_s, beta_used=beta,
                elapsed_s=time.perf_counter() - started,
            ))
            trace.diverged = True
            trace.final_x = x
            logger.info(f"{name}: residual norm {w_norm:.3e} at k = {k}, giving up")
            raise Diverged(f"Residual norm {w_norm:.3e} at iteration {k}", trace=trace)

        if w_norm < config.tol:
            trace.records.append(IterationRecord(
                k=k, residual_norm=w_norm, m_k=len(history), cs_used=c_s, beta_used=beta,
                kept_mask=[True] * len(history), elapsed_s=time.perf_counter() - started,
            ))
            trace.converged = True
            trace.final_x = x
            logger.info(f"{name}: converged at k = {k}, ||w|| = {w_norm:.3e}")
            return trace

        if k == config.max_iters:
            trace.records.append(IterationRecord(
                k=k, residual_norm=w_norm, m_k=len(history), cs_used=c_s, beta_used=beta,
                kept_mask=[True] * len(history), elapsed_s=time.perf_counter() - started,
            ))
            trace.final_x = x
            logger.info(f"{name}: no convergence after {k} updates, ||w|| = {w_norm:.3e}")
            raise MaxIters(f"Residual norm {w_norm:.3e} after {k} updates", trace=trace)

        if k >= 1:
            history.push(x - x_prev, w - w_prev, depth.cap(k, w_norm))

        try:
            if not history:
                step = _Step()
            else:
                E, F = history.matrices()
                if k == 1:
                    step = _depth_one_step(E, F, w)
                    if step.depth == 0:
                        history.clear()
                elif config.strategy == Strategy.FAA:
                    step = _filtered_step(E, F, w, config, c_s)
                    history.apply_mask(step.kept_mask)
                elif config.strategy == Strategy.TSVD:
                    step = _tsvd_step(E, F, w, config)
                else:
                    step = _plain_step(E, F, w)
        except LinalgError as e:
            trace.diverged = True
            trace.final_x = x
            logger.info(f"{name}: least-squares breakdown at k = {k}: {e}")
            raise Diverged(f"Least-squares breakdown at iteration {k}: {e}", trace=trace) from e

        theta = gain(step.F, step.gamma, w)
        x_next = aa_update(x, w, step.E, step.F, step.gamma, beta)

        trace.records.append(IterationRecord(
            k=k,
            residual_norm=w_norm,
            theta=theta,
            cond_F=step.cond_F,
            m_k=step.depth,
            kept_mask=step.kept_mask,
            cs_used=c_s,
            beta_used=beta,
            sigma_min=step.sigma_min,
            dropped_length=step.dropped_length,
            dropped_angle=step.dropped_angle,
            tsvd_rank=step.tsvd_rank,
            elapsed_s=time.perf_counter() - started,
        ))
        logger.debug(f"k = {k}: ||w|| = {w_norm:.3e}, theta = {theta:.3f}, "
                     f"m_k = {step.depth}, cond_F = {step.cond_F:.3e}")

        x_prev, w_prev = x, w
        x = x_next

    # the last pass of the loop returns or raises
    raise AssertionError("unreachable")
