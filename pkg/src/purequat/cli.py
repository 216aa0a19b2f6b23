"""Command-line front end.

Exit codes: 0 success, 1 validation or I/O error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .altproj import AltProjConfig, alt_proj
from .baselines import qsvd_tr, truncation_rank
from .core import frobenius_norm, load_json, save_json, to_json_dict
from .drsm import DrsmConfig, hybrid_solve
from .experiment import ExperimentSpec, run_experiment, _write_trace_csv, _trace_rows
from .generate import gen_random_pure, gen_random_pure_lowrank, gen_random_quaternion
from .image import image_to_quat, quat_to_image, read_ppm, write_ppm
from .qsvd import JacobiConvergenceError, numerical_rank, qsvd, truncate


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="purequat",
                     description="Low-rank pure quaternion matrix approximation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qsvd", help="singular values / truncation of a matrix JSON")
    p.add_argument("input")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--out", default=None, help="truncated matrix output (with --rank)")

    p = sub.add_parser("approx", help="rank-r pure approximation of a matrix JSON")
    p.add_argument("input")
    p.add_argument("--method", choices=("altproj", "hybrid", "qsvdtr"), default="altproj")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--drsm-steps", type=int, default=500)
    p.add_argument("--convention", choices=("a", "b"), default="a")
    p.add_argument("--trace", default=None, help="write per-iteration CSV here")
    p.add_argument("--out", default=None, help="solution matrix output path")

    p = sub.add_parser("gen", help="generate a seeded random instance")
    p.add_argument("--kind", choices=("pure", "lowrank", "quaternion"), default="pure")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="for --kind lowrank")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)

    p = sub.add_parser("experiment", help="run a full solver comparison")
    p.add_argument("--kind", required=True,
                   choices=("synthetic_5x5", "random_exact_lowrank", "random_pure", "image"))
    p.add_argument("--ranks", required=True, help="comma-separated target ranks")
    p.add_argument("--m", type=int, default=100)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--solvers", default="altproj,qsvdtr")
    p.add_argument("--max-iters", type=int, default=5000)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--drsm-steps", type=int, default=500)
    p.add_argument("--convention", choices=("a", "b"), default="a")
    p.add_argument("--image", default=None)
    p.add_argument("--solutions", action="store_true", help="write solution matrices")
    p.add_argument("--out-dir", required=True)

    p = sub.add_parser("img2q", help="PPM image to pure quaternion matrix JSON")
    p.add_argument("input")
    p.add_argument("output")

    p = sub.add_parser("q2img", help="pure quaternion matrix JSON to PPM image")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--bit-depth", type=int, choices=(8, 16), default=8)

    return parser


def _cmd_qsvd(args) -> None:
    A = load_json(args.input)
    f = qsvd(A)
    print(json.dumps({"sigma": [float(s) for s in f.sigma]}))
    if args.rank is not None:
        if args.out is None:
            raise UsageError("--rank requires --out for the truncated matrix")
        save_json(truncate(f, args.rank), args.out)


def _cmd_approx(args) -> None:
    A = load_json(args.input)
    if args.method == "qsvdtr":
        r_trunc = truncation_rank(args.rank, args.convention)
        solution = qsvd_tr(A, r_trunc)
        summary = {
            "method": "qsvdtr",
            "rank": args.rank,
            "truncation_rank": r_trunc,
            "objective": frobenius_norm(solution - A),
            "solution_rank": numerical_rank(solution),
        }
    else:
        ap_cfg = AltProjConfig(rank=args.rank, max_iters=args.max_iters,
                               residual_tol=args.tol, trace=True)
        if args.method == "hybrid":
            report = hybrid_solve(A, DrsmConfig(rank=args.rank, steps=args.drsm_steps), ap_cfg)
        else:
            report = alt_proj(A, A, ap_cfg)
        solution = report.solution
        summary = {"method": args.method, "rank": args.rank, **report.summary_dict()}
        if args.trace:
            _write_trace_csv(args.trace, _trace_rows(report))
    print(json.dumps(summary))
    if args.out:
        save_json(solution, args.out)


def _cmd_gen(args) -> None:
    if args.kind == "lowrank":
        if args.rank is None:
            raise UsageError("--kind lowrank requires --rank")
        A = gen_random_pure_lowrank(args.m, args.n, args.rank, args.seed)
    elif args.kind == "quaternion":
        A = gen_random_quaternion(args.m, args.n, args.seed)
    else:
        A = gen_random_pure(args.m, args.n, args.seed)
    save_json(A, args.out)


def _cmd_experiment(args) -> None:
    try:
        ranks = [int(tok) for tok in args.ranks.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --ranks value: {exc}") from exc
    spec = ExperimentSpec(
        kind=args.kind,
        ranks=ranks,
        seed=args.seed,
        m=args.m,
        n=args.n,
        solvers=tuple(s.strip() for s in args.solvers.split(",") if s.strip()),
        max_iters=args.max_iters,
        residual_tol=args.tol,
        drsm_steps=args.drsm_steps,
        convention=args.convention,
        image_path=args.image,
        write_solutions=args.solutions,
    )
    summary = run_experiment(spec, args.out_dir)
    print(json.dumps({"out_dir": args.out_dir, "cells": len(summary["cells"])}))


def _cmd_img2q(args) -> None:
    save_json(image_to_quat(read_ppm(args.input)), args.output)


def _cmd_q2img(args) -> None:
    write_ppm(quat_to_image(load_json(args.input), bit_depth=args.bit_depth), args.output)


_COMMANDS = {
    "qsvd": _cmd_qsvd,
    "approx": _cmd_approx,
    "gen": _cmd_gen,
    "experiment": _cmd_experiment,
    "img2q": _cmd_img2q,
    "q2img": _cmd_q2img,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except JacobiConvergenceError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
