"""Optimal low-rank pure quaternion matrix approximation.

Alternating projections between the fixed-rank quaternion matrix set and
the zero-real-part subspace, with a Douglas-Rachford splitting warm start
and a truncate-then-drop-real baseline.
"""

from .altproj import AltProjConfig, AltProjReport, alt_proj
from .baselines import RankBounds, qsvd_tr, rank_bounds_check, truncation_rank
from .core import (
    PartialConj,
    Quaternion,
    QuatMatrix,
    RealRep,
    StructureError,
    conj_transpose,
    frobenius_norm,
    from_json_dict,
    from_real_rep,
    hamilton_mul,
    load_json,
    partial_conj,
    pure_part,
    qmat_mul,
    real_part,
    save_json,
    to_json_dict,
    to_real_rep,
)
from .drsm import DrsmConfig, DrsmState, drsm_run, hybrid_solve, prox_f, prox_g
from .experiment import ExperimentSpec, run_experiment
from .generate import (
    gen_random_pure,
    gen_random_pure_lowrank,
    gen_random_quaternion,
    section1_2x2,
    synthetic_5x5,
)
from .image import ImageTensor, image_to_quat, quat_to_image, read_ppm, write_ppm
from .projections import pi1, pi2
from .qsvd import JacobiConvergenceError, QsvdFactors, numerical_rank, qsvd, truncate

__version__ = "0.1.0"

__all__ = [
    "AltProjConfig",
    "AltProjReport",
    "DrsmConfig",
    "DrsmState",
    "ExperimentSpec",
    "ImageTensor",
    "JacobiConvergenceError",
    "PartialConj",
    "QsvdFactors",
    "QuatMatrix",
    "Quaternion",
    "RankBounds",
    "RealRep",
    "StructureError",
    "alt_proj",
    "conj_transpose",
    "drsm_run",
    "frobenius_norm",
    "from_json_dict",
    "from_real_rep",
    "gen_random_pure",
    "gen_random_pure_lowrank",
    "gen_random_quaternion",
    "hamilton_mul",
    "hybrid_solve",
    "image_to_quat",
    "load_json",
    "numerical_rank",
    "partial_conj",
    "pi1",
    "pi2",
    "prox_f",
    "prox_g",
    "pure_part",
    "qmat_mul",
    "qsvd",
    "qsvd_tr",
    "quat_to_image",
    "rank_bounds_check",
    "read_ppm",
    "real_part",
    "run_experiment",
    "save_json",
    "section1_2x2",
    "synthetic_5x5",
    "to_json_dict",
    "to_real_rep",
    "truncate",
    "truncation_rank",
    "write_ppm",
]
