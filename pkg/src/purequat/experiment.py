"""Experiment orchestration: build an instance, run solvers over ranks,
write summary JSON, trace CSVs, and singular-value dumps.

Cells (solver, rank) are independent of each other and are written
atomically, so a caller may distribute them across processes; this driver
runs them sequentially in a fixed order for reproducible summaries.
"""

from __future__ import annotations

import csv
import json
import os
import time
from dataclasses import dataclass, field

from .altproj import AltProjConfig, AltProjReport, alt_proj
from .baselines import qsvd_tr, truncation_rank
from .core import QuatMatrix, frobenius_norm, to_json_dict
from .drsm import DrsmConfig, hybrid_solve
from .generate import gen_random_pure, gen_random_pure_lowrank, synthetic_5x5
from .image import image_to_quat, read_ppm
from .qsvd import qsvd

KINDS = ("synthetic_5x5", "random_exact_lowrank", "random_pure", "image")
SOLVERS = ("altproj", "hybrid", "qsvdtr")


@dataclass
class ExperimentSpec:
    kind: str
    ranks: list[int]
    seed: int = 0
    m: int = 100
    n: int = 100
    solvers: tuple[str, ...] = ("altproj", "qsvdtr")
    max_iters: int = 5000
    residual_tol: float = 1e-6
    drsm_steps: int = 500
    convention: str = "a"
    image_path: str | None = None
    write_traces: bool = True
    write_solutions: bool = False

    def validate(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if not self.ranks:
            raise ValueError("ranks list is empty")
        if any(r < 1 for r in self.ranks):
            raise ValueError("ranks must be positive")
        for s in self.solvers:
            if s not in SOLVERS:
                raise ValueError(f"unknown solver {s!r}")
        if self.convention not in ("a", "b"):
            raise ValueError("convention must be 'a' or 'b'")
        if self.kind == "image" and not self.image_path:
            raise ValueError("image experiments require image_path")


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _build_instance(spec: ExperimentSpec, rank: int) -> QuatMatrix:
    if spec.kind == "synthetic_5x5":
        return synthetic_5x5()
    if spec.kind == "random_exact_lowrank":
        return gen_random_pure_lowrank(spec.m, spec.n, max(1, rank // 4), spec.seed)
    if spec.kind == "random_pure":
        return gen_random_pure(spec.m, spec.n, spec.seed)
    img = read_ppm(spec.image_path)
    return image_to_quat(img)


def _trace_rows(report: AltProjReport):
    rows = []
    offset = 0.0
    if report.drsm_steps:
        for step, (res, obj, sec) in enumerate(
                zip(report.drsm_residual_trace, report.drsm_objective_trace,
                    report.drsm_seconds_trace), start=1):
            rows.append(("drsm", step, res, obj, sec))
        offset = report.drsm_seconds_trace[-1] if report.drsm_seconds_trace else 0.0
    for step, (res, obj, sec) in enumerate(
            zip(report.residual_trace, report.objective_trace,
                report.seconds_trace), start=1):
        rows.append(("altproj", step, res, obj, sec + offset))
    return rows


def _write_trace_csv(path: str, rows) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["phase", "step", "residual", "objective", "seconds"])
        for row in rows:
            writer.writerow([row[0], row[1], repr(row[2]), repr(row[3]), f"{row[4]:.6f}"])
    os.replace(tmp, path)


def run_experiment(spec: ExperimentSpec, out_dir: str) -> dict:
    """Run every (rank, solver) cell and write report files under out_dir."""
    spec.validate()
    # fail fast on unreadable inputs before creating any files
    if spec.kind == "image":
        instance_probe = _build_instance(spec, spec.ranks[0])
        if max(spec.ranks) > min(instance_probe.shape):
            raise ValueError("a target rank exceeds the image dimensions")
    elif spec.kind != "synthetic_5x5" and max(spec.ranks) > min(spec.m, spec.n):
        raise ValueError("a target rank exceeds min(m, n)")

    os.makedirs(out_dir, exist_ok=True)
    cells = []
    sv_rows = []
    dims = None
    input_sv_done = False
    for rank in spec.ranks:
        A = _build_instance(spec, rank)
        dims = A.shape
        if not input_sv_done or spec.kind == "random_exact_lowrank":
            label = "input" if spec.kind != "random_exact_lowrank" else f"input_r{rank}"
            for idx, s in enumerate(qsvd(A).sigma):
                sv_rows.append((label, idx, s))
            input_sv_done = True
        for solver in spec.solvers:
            cell = _run_cell(spec, A, rank, solver, out_dir)
            cells.append(cell)
            for idx, s in enumerate(cell.pop("_solution_sigma")):
                sv_rows.append((f"{solver}_r{rank}", idx, s))

    summary = {
        "kind": spec.kind,
        "m": dims[0],
        "n": dims[1],
        "seed": spec.seed,
        "convention": spec.convention,
        "ranks": list(spec.ranks),
        "solvers": list(spec.solvers),
        "cells": cells,
    }
    _atomic_write(os.path.join(out_dir, "summary.json"), json.dumps(summary, indent=2))
    sv_tmp = os.path.join(out_dir, "singular_values.csv")
    with open(sv_tmp + ".tmp", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "index", "sigma"])
        for label, idx, s in sv_rows:
            writer.writerow([label, idx, repr(float(s))])
    os.replace(sv_tmp + ".tmp", sv_tmp)
    return summary


def _run_cell(spec: ExperimentSpec, A: QuatMatrix, rank: int, solver: str,
              out_dir: str) -> dict:
    cell: dict = {"solver": solver, "rank": rank}
    if solver == "qsvdtr":
        r_trunc = truncation_rank(rank, spec.convention)
        t0 = time.perf_counter()
        solution = qsvd_tr(A, r_trunc)
        elapsed = time.perf_counter() - t0
        cell.update({
            "truncation_rank": r_trunc,
            "objective": frobenius_norm(solution - A),
            "iterations": 1,
            "converged": True,
            "elapsed": elapsed,
        })
    else:
        ap_cfg = AltProjConfig(rank=rank, max_iters=spec.max_iters,
                               residual_tol=spec.residual_tol, trace=True)
        if solver == "hybrid":
            report = hybrid_solve(A, DrsmConfig(rank=rank, steps=spec.drsm_steps), ap_cfg)
        else:
            report = alt_proj(A, A, ap_cfg)
        solution = report.solution
        cell.update({
            "objective": report.objective,
            "iterations": report.iterations,
            "converged": report.converged,
            "tail_ratio": report.tail_ratio,
            "elapsed": report.elapsed,
            "final_residual": report.residual_trace[-1] if report.residual_trace else None,
        })
        if spec.write_traces:
            trace_path = os.path.join(out_dir, f"trace_{solver}_r{rank}.csv")
            _write_trace_csv(trace_path, _trace_rows(report))
            cell["trace_file"] = os.path.basename(trace_path)
        if spec.write_solutions:
            sol_path = os.path.join(out_dir, f"solution_{solver}_r{rank}.json")
            _atomic_write(sol_path, json.dumps(to_json_dict(solution)))
            cell["solution_file"] = os.path.basename(sol_path)
    f = qsvd(solution)
    tolcut = 1e-10 * f.sigma[0] if f.sigma[0] > 0 else 0.0
    cell["solution_rank"] = int((f.sigma > tolcut).sum()) if f.sigma[0] > 0 else 0
    cell["_solution_sigma"] = [float(s) for s in f.sigma]
    return cell
