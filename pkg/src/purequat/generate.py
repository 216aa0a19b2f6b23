"""Seeded instance generators and the fixed matrices from the worked examples.

All randomness comes from numpy's PCG64 bit generator seeded directly with
the given 64-bit seed; normals are drawn with Generator.standard_normal
(ziggurat method).  Component planes are filled in one call on a
(components, m, n) block in C order, so a fixed seed reproduces the exact
instance stream.
"""

from __future__ import annotations

import numpy as np

from .core import QuatMatrix, pure_part
from .qsvd import qsvd, truncate


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def gen_random_quaternion(m: int, n: int, seed: int) -> QuatMatrix:
    """Standard-normal entries on all four component planes."""
    return QuatMatrix.from_stack(_rng(seed).standard_normal((4, m, n)))


def gen_random_pure(m: int, n: int, seed: int) -> QuatMatrix:
    """Standard-normal imaginary planes, exactly zero real plane."""
    comps = np.zeros((4, m, n))
    comps[1:] = _rng(seed).standard_normal((3, m, n))
    return QuatMatrix.from_stack(comps)


def gen_random_pure_lowrank(m: int, n: int, r: int, seed: int) -> QuatMatrix:
    """Pure part of the rank-r truncation of a random quaternion matrix.

    The result is exactly pure with rank at most 4r (typically exactly 4r).
    """
    g = gen_random_quaternion(m, n, seed)
    return pure_part(truncate(qsvd(g), r))


def section1_2x2() -> QuatMatrix:
    """The 2x2 pure matrix of the introduction's worked example."""
    z = np.zeros((2, 2))
    return QuatMatrix(
        z,
        np.array([[1.0, 0.0], [0.0, 0.0]]),
        np.array([[0.0, 1.0], [0.0, 1.0]]),
        np.array([[0.0, 0.0], [1.0, 0.0]]),
    )


def synthetic_5x5() -> QuatMatrix:
    """The printed 5x5 pure matrix used for the synthetic comparison."""
    ai = np.array([
        [0.37, -0.79, 0.04, -0.73, -0.06],
        [-1.42, -0.10, 1.01, 1.59, -1.59],
        [-0.34, 0.38, 1.30, -0.66, 1.08],
        [-1.98, 0.83, 0.22, -0.77, 0.70],
        [-0.38, -0.14, 0.86, 0.54, 1.65],
    ])
    aj = np.array([
        [0.29, -0.38, -0.13, -1.77, 0.20],
        [0.70, -0.69, 0.83, -0.16, -0.52],
        [-1.15, 1.00, -1.97, 0.63, 1.57],
        [1.86, -1.14, 0.12, -1.27, 0.77],
        [2.37, 0.15, 0.26, -0.30, -0.59],
    ])
    ak = np.array([
        [0.33, 0.74, -1.40, -0.77, 0.86],
        [1.13, -1.32, 0.36, -0.02, 0.50],
        [0.25, -0.68, 0.36, -0.71, 0.77],
        [0.56, -0.35, 0.92, 0.87, -0.58],
        [0.64, -1.59, 0.37, -1.51, 0.19],
    ])
    return QuatMatrix(np.zeros((5, 5)), ai, aj, ak)
