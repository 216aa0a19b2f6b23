"""Alternating projections between the rank-r manifold and the pure subspace.

Each iteration applies the rank truncation, measures the real mass it
exposed, then removes the real plane.  The residual ||Re(Y_k)||_F is zero
exactly when the current iterate already satisfies both constraints.
"""

from __future__ import annotations

import math
import time
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .core import QuatMatrix, frobenius_norm
from .projections import pi1, pi2


@dataclass(frozen=True)
class AltProjConfig:
    rank: int
    max_iters: int = 5000
    residual_tol: float = 1e-6
    trace: bool = True

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be positive")
        if self.residual_tol < 0:
            raise ValueError("residual_tol must be nonnegative")


@dataclass
class AltProjReport:
    """Outcome of a run; the solution is always exactly pure."""

    solution: QuatMatrix
    iterations: int
    objective: float
    residual_trace: list[float]
    elapsed: float
    converged: bool
    tail_ratio: float | None
    objective_trace: list[float] = field(default_factory=list)
    seconds_trace: list[float] = field(default_factory=list)
    # populated by hybrid_solve
    drsm_steps: int = 0
    drsm_residual_trace: list[float] = field(default_factory=list)
    drsm_objective_trace: list[float] = field(default_factory=list)
    drsm_seconds_trace: list[float] = field(default_factory=list)

    def summary_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "objective": self.objective,
            "converged": self.converged,
            "tail_ratio": self.tail_ratio,
            "elapsed": self.elapsed,
            "final_residual": self.residual_trace[-1] if self.residual_trace else None,
            "drsm_steps": self.drsm_steps,
        }


def _geometric_tail_ratio(residuals) -> float | None:
    """Geometric mean of consecutive residual ratios over the last 10 entries."""
    tail = list(residuals)[-10:]
    logs = []
    for prev, cur in zip(tail, tail[1:]):
        if prev > 0.0 and cur > 0.0:
            logs.append(math.log(cur / prev))
    if not logs:
        return None
    return math.exp(sum(logs) / len(logs))


def alt_proj(A: QuatMatrix, start: QuatMatrix, cfg: AltProjConfig) -> AltProjReport:
    """Run Y <- pi1(X), X <- pi2(Y) from X0 = start until ||Re(Y)|| < tol.

    On convergence the last iterate is returned; on max_iters exhaustion the
    best-objective iterate seen is returned with converged=False.
    """
    if start.shape != A.shape:
        raise ValueError(f"start shape {start.shape} differs from A {A.shape}")
    if cfg.rank > min(A.shape):
        raise ValueError(f"rank {cfg.rank} exceeds min(m, n) = {min(A.shape)}")

    t0 = time.perf_counter()
    X = start
    best_obj = math.inf
    best_X = start
    residuals: list[float] = []
    objectives: list[float] = []
    seconds: list[float] = []
    window: deque[float] = deque(maxlen=10)

    iterations = 0
    converged = False
    for k in range(1, cfg.max_iters + 1):
        iterations = k
        Y = pi1(X, cfg.rank)
        res = float(np.sqrt((Y.comps[0] ** 2).sum()))
        X = pi2(Y)
        obj = frobenius_norm(X - A)
        window.append(res)
        if cfg.trace:
            residuals.append(res)
            objectives.append(obj)
            seconds.append(time.perf_counter() - t0)
        if obj < best_obj:
            best_obj = obj
            best_X = X
        if res < cfg.residual_tol:
            converged = True
            break

    if converged:
        solution, objective = X, frobenius_norm(X - A)
    else:
        solution, objective = best_X, best_obj
    return AltProjReport(
        solution=solution,
        iterations=iterations,
        objective=objective,
        residual_trace=residuals,
        elapsed=time.perf_counter() - t0,
        converged=converged,
        tail_ratio=_geometric_tail_ratio(window),
        objective_trace=objectives,
        seconds_trace=seconds,
    )
