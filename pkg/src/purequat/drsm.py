"""Douglas-Rachford splitting warm start for the alternating projections.

Solves the penalized relaxation min f + g with
f(X) = 1/2 ||X - A||^2 + tau/2 ||Re(X)||^2 and
g(X) = 1/2 ||X - A||^2 + indicator(rank <= r),
iterating prox steps with a doubling penalty tau and a decaying step alpha
kept above the stability floor 0.99/(1+tau).  The Y iterate after a fixed
number of steps is handed to alt_proj as its start point.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass, field

import numpy as np

from .altproj import AltProjConfig, AltProjReport, alt_proj
from .core import QuatMatrix, frobenius_norm
from .projections import pi1


@dataclass(frozen=True)
class DrsmConfig:
    rank: int
    steps: int = 500
    tau0: float = 1.0
    tau_double_until: int = 1000
    alpha0_numerator: float = 150.0
    alpha_decay: float = 0.7
    alpha_floor_numerator: float = 0.99

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.steps < 0:
            raise ValueError("steps must be nonnegative")
        if not 0.0 < self.alpha_decay < 1.0:
            raise ValueError("alpha_decay must lie in (0, 1)")
        if not 0.0 < self.alpha_floor_numerator < 1.0:
            # the floor must eventually satisfy the stepsize bound alpha < 1/(1+tau)
            raise ValueError("alpha_floor_numerator must lie in (0, 1)")
        if self.tau0 <= 0:
            raise ValueError("tau0 must be positive")

    @property
    def alpha0(self) -> float:
        return self.alpha0_numerator / (1.0 + self.tau0)


def advance_schedule(tau: float, alpha: float, k: int, cfg: DrsmConfig) -> tuple[float, float]:
    """One schedule update: tau doubles until the freeze step, alpha decays
    geometrically but never below the floor numerator / (1 + tau)."""
    if k <= cfg.tau_double_until:
        tau = 2.0 * tau
    alpha = max(cfg.alpha_decay * alpha, cfg.alpha_floor_numerator / (1.0 + tau))
    return tau, alpha


@dataclass
class DrsmState:
    """Iterates and schedule position after a run."""

    x: QuatMatrix
    y: QuatMatrix
    z: QuatMatrix
    k: int
    tau: float
    alpha: float
    residual_trace: list[float] = field(default_factory=list)
    objective_trace: list[float] = field(default_factory=list)
    seconds_trace: list[float] = field(default_factory=list)


def prox_f(Y: QuatMatrix, A: QuatMatrix, alpha: float, tau: float) -> QuatMatrix:
    """Closed-form prox of alpha * (1/2||.-A||^2 + tau/2||Re(.)||^2).

    Real plane: (alpha*A0 + Y0) / (1 + alpha + alpha*tau); imaginary planes:
    (alpha*Ac + Yc) / (1 + alpha).
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if tau < 0:
        raise ValueError("tau must be nonnegative")
    out = (alpha * A.comps + Y.comps) / (1.0 + alpha)
    out[0] = (alpha * A.comps[0] + Y.comps[0]) / (1.0 + alpha + alpha * tau)
    return QuatMatrix.from_stack(out)


def prox_g(W: QuatMatrix, A: QuatMatrix, alpha: float, r: int) -> QuatMatrix:
    """Prox of alpha * (1/2||.-A||^2 + rank indicator): rank-r truncation of
    the blend alpha/(1+alpha) A + 1/(1+alpha) W."""
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    blend = QuatMatrix.from_stack((alpha * A.comps + W.comps) / (1.0 + alpha))
    return pi1(blend, r)


def drsm_run(A: QuatMatrix, cfg: DrsmConfig) -> DrsmState:
    """Run cfg.steps DRSM iterations from X0 = A.

    The handoff value for warm starts is the final Y iterate.  A is expected
    to be pure; a non-pure input is accepted with a warning since the prox
    formulas keep the general A0 term.
    """
    if not A.is_pure():
        warnings.warn("drsm_run input has a nonzero real part", stacklevel=2)
    t0 = time.perf_counter()
    x = y = z = A
    tau, alpha = cfg.tau0, cfg.alpha0
    residuals: list[float] = []
    objectives: list[float] = []
    seconds: list[float] = []
    for k in range(1, cfg.steps + 1):
        tau, alpha = advance_schedule(tau, alpha, k, cfg)
        y = prox_f(x, A, alpha, tau)
        w = QuatMatrix.from_stack(2.0 * y.comps - x.comps)
        z = prox_g(w, A, alpha, cfg.rank)
        x = QuatMatrix.from_stack(x.comps + z.comps - y.comps)
        residuals.append(float(np.sqrt((y.comps[0] ** 2).sum())))
        objectives.append(frobenius_norm(y - A))
        seconds.append(time.perf_counter() - t0)
    return DrsmState(
        x=x, y=y, z=z, k=cfg.steps, tau=tau, alpha=alpha,
        residual_trace=residuals,
        objective_trace=objectives,
        seconds_trace=seconds,
    )


def hybrid_solve(A: QuatMatrix, drsm_cfg: DrsmConfig, ap_cfg: AltProjConfig) -> AltProjReport:
    """DRSM warm start followed by alternating projections from its Y iterate."""
    state = drsm_run(A, drsm_cfg)
    report = alt_proj(A, state.y, ap_cfg)
    report.drsm_steps = state.k
    report.drsm_residual_trace = state.residual_trace
    report.drsm_objective_trace = state.objective_trace
    report.drsm_seconds_trace = state.seconds_trace
    return report
