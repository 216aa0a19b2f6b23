"""Quaternion scalars and dense quaternion matrices stored as four real planes.

A quaternion matrix A = A0 + A1 i + A2 j + A3 k is kept as a single
(4, m, n) float64 stack, component-major.  All operations are pure
functions returning new values; the stacks are frozen (read-only) so
instances are safe to share across threads.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass

import numpy as np


class StructureError(ValueError):
    """A real 4m x 4n matrix does not carry the quaternion block pattern."""


@dataclass(frozen=True)
class Quaternion:
    """Scalar quaternion q = r + i*i + j*j + k*k with finite components."""

    r: float = 0.0
    i: float = 0.0
    j: float = 0.0
    k: float = 0.0

    def __post_init__(self):
        for name in ("r", "i", "j", "k"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"non-finite component {name}={v!r}")
            object.__setattr__(self, name, v)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.r, -self.i, -self.j, -self.k)

    def modulus(self) -> float:
        return math.sqrt(self.r**2 + self.i**2 + self.j**2 + self.k**2)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return hamilton_mul(self, other)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.r + other.r, self.i + other.i,
                          self.j + other.j, self.k + other.k)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.r, -self.i, -self.j, -self.k)


def hamilton_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product with i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j."""
    return Quaternion(
        p.r * q.r - p.i * q.i - p.j * q.j - p.k * q.k,
        p.r * q.i + p.i * q.r + p.j * q.k - p.k * q.j,
        p.r * q.j - p.i * q.k + p.j * q.r + p.k * q.i,
        p.r * q.k + p.i * q.j - p.j * q.i + p.k * q.r,
    )


def _mul_stacks(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Component planes of the product (A0+A1i+A2j+A3k)(B0+B1i+B2j+B3k)."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return np.stack([
        a0 @ b0 - a1 @ b1 - a2 @ b2 - a3 @ b3,
        a0 @ b1 + a1 @ b0 + a2 @ b3 - a3 @ b2,
        a0 @ b2 - a1 @ b3 + a2 @ b0 + a3 @ b1,
        a0 @ b3 + a1 @ b2 - a2 @ b1 + a3 @ b0,
    ])


class QuatMatrix:
    """Dense m x n quaternion matrix held as a read-only (4, m, n) stack."""

    __slots__ = ("comps",)

    def __init__(self, a0, a1, a2, a3):
        planes = [np.ascontiguousarray(x, dtype=np.float64) for x in (a0, a1, a2, a3)]
        shape = planes[0].shape
        if len(shape) != 2:
            raise ValueError(f"component planes must be 2-d, got shape {shape}")
        for x in planes[1:]:
            if x.shape != shape:
                raise ValueError(f"component shapes differ: {x.shape} vs {shape}")
        comps = np.stack(planes)
        if not np.isfinite(comps).all():
            raise ValueError("non-finite entries in quaternion matrix")
        comps.flags.writeable = False
        object.__setattr__(self, "comps", comps)

    @classmethod
    def from_stack(cls, comps: np.ndarray) -> "QuatMatrix":
        """Build from a (4, m, n) component stack."""
        comps = np.asarray(comps, dtype=np.float64)
        if comps.ndim != 3 or comps.shape[0] != 4:
            raise ValueError(f"expected (4, m, n) stack, got {comps.shape}")
        return cls(comps[0], comps[1], comps[2], comps[3])

    @classmethod
    def zeros(cls, m: int, n: int) -> "QuatMatrix":
        return cls.from_stack(np.zeros((4, m, n)))

    @classmethod
    def eye(cls, n: int) -> "QuatMatrix":
        z = np.zeros((n, n))
        return cls(np.eye(n), z, z, z)

    @property
    def a0(self) -> np.ndarray:
        return self.comps[0]

    @property
    def a1(self) -> np.ndarray:
        return self.comps[1]

    @property
    def a2(self) -> np.ndarray:
        return self.comps[2]

    @property
    def a3(self) -> np.ndarray:
        return self.comps[3]

    @property
    def m(self) -> int:
        return self.comps.shape[1]

    @property
    def n(self) -> int:
        return self.comps.shape[2]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.m, self.n)

    def is_pure(self) -> bool:
        """True when the real plane is exactly zero."""
        return not self.comps[0].any()

    def __add__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix.from_stack(self.comps + other.comps)

    def __sub__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix.from_stack(self.comps - other.comps)

    def __neg__(self) -> "QuatMatrix":
        return QuatMatrix.from_stack(-self.comps)

    def __mul__(self, scalar: float) -> "QuatMatrix":
        return QuatMatrix.from_stack(self.comps * float(scalar))

    __rmul__ = __mul__

    def __matmul__(self, other: "QuatMatrix") -> "QuatMatrix":
        return qmat_mul(self, other)

    def __repr__(self):
        return f"QuatMatrix(m={self.m}, n={self.n}, pure={self.is_pure()})"


def qmat_mul(A: QuatMatrix, B: QuatMatrix) -> QuatMatrix:
    """Quaternion matrix product, entrywise Hamilton products summed."""
    if A.n != B.m:
        raise ValueError(f"inner dimensions differ: {A.shape} @ {B.shape}")
    return QuatMatrix.from_stack(_mul_stacks(A.comps, B.comps))


def conj_transpose(A: QuatMatrix) -> QuatMatrix:
    """A*: transpose with entrywise quaternion conjugation."""
    c = A.comps
    return QuatMatrix(c[0].T, -c[1].T, -c[2].T, -c[3].T)


class PartialConj(enum.Enum):
    """Which pair of imaginary components a partial conjugate negates."""

    IJ = "ij"
    IK = "ik"
    JK = "jk"


_PARTIAL_SIGNS = {
    PartialConj.IJ: (1.0, -1.0, -1.0, 1.0),
    PartialConj.IK: (1.0, -1.0, 1.0, -1.0),
    PartialConj.JK: (1.0, 1.0, -1.0, -1.0),
}


def partial_conj(A: QuatMatrix, which: PartialConj) -> QuatMatrix:
    """Partial conjugate negating the named pair, e.g. A0 - A1 i - A2 j + A3 k."""
    s = _PARTIAL_SIGNS[PartialConj(which)]
    return QuatMatrix.from_stack(A.comps * np.asarray(s)[:, None, None])


@dataclass(frozen=True)
class RealRep:
    """Structured 4m x 4n real representation of an m x n quaternion matrix."""

    data: np.ndarray
    m: int
    n: int

    def __post_init__(self):
        d = np.asarray(self.data, dtype=np.float64)
        if d.shape != (4 * self.m, 4 * self.n):
            raise ValueError(f"expected shape {(4 * self.m, 4 * self.n)}, got {d.shape}")
        object.__setattr__(self, "data", d)


# Block pattern of the real representation.  Entry (r, c) holds
# (sign, component) of the block at block-row r, block-column c:
#
#      A0  -A1  -A2  -A3
#      A1   A0  -A3   A2
#      A2   A3   A0  -A1
#      A3  -A2   A1   A0
#
# This is the standard form that makes the map a ring homomorphism
# (products and conjugate transposes carry over exactly).
_REAL_REP_PATTERN = (
    ((1, 0), (-1, 1), (-1, 2), (-1, 3)),
    ((1, 1), (1, 0), (-1, 3), (1, 2)),
    ((1, 2), (1, 3), (1, 0), (-1, 1)),
    ((1, 3), (-1, 2), (1, 1), (1, 0)),
)


def to_real_rep(A: QuatMatrix) -> RealRep:
    """Embed A into its 4m x 4n structured real representation."""
    m, n = A.shape
    out = np.empty((4 * m, 4 * n))
    for br, row in enumerate(_REAL_REP_PATTERN):
        for bc, (sign, comp) in enumerate(row):
            out[br * m:(br + 1) * m, bc * n:(bc + 1) * n] = sign * A.comps[comp]
    return RealRep(out, m, n)


def from_real_rep(X: RealRep, rel_tol: float = 1e-12) -> QuatMatrix:
    """Invert the real representation, averaging the four redundant copies.

    Raises StructureError when the block copies disagree beyond
    rel_tol relative to the largest entry of the input.
    """
    m, n = X.m, X.n
    d = X.data
    copies = np.empty((4, 4, m, n))  # [component, copy]; one copy per block-row
    for br, row in enumerate(_REAL_REP_PATTERN):
        for bc, (sign, comp) in enumerate(row):
            block = d[br * m:(br + 1) * m, bc * n:(bc + 1) * n]
            copies[comp, br] = sign * block
    mean = copies.mean(axis=1)
    dev = np.abs(copies - mean[:, None]).max()
    scale = max(1.0, float(np.abs(d).max()))
    if dev > rel_tol * scale:
        raise StructureError(
            f"real representation blocks disagree: deviation {dev:.3e} "
            f"exceeds {rel_tol:.1e} * {scale:.3e}"
        )
    return QuatMatrix.from_stack(mean)


def real_part(A: QuatMatrix) -> np.ndarray:
    """The real component plane A0 (a copy)."""
    return A.comps[0].copy()


def pure_part(A: QuatMatrix) -> QuatMatrix:
    """A with the real plane replaced by exact zeros."""
    c = A.comps.copy()
    c[0] = 0.0
    return QuatMatrix.from_stack(c)


def frobenius_norm(A: QuatMatrix) -> float:
    """sqrt of the summed squares of all four component planes."""
    return float(np.sqrt((A.comps ** 2).sum()))


def to_json_dict(A: QuatMatrix) -> dict:
    return {
        "m": A.m,
        "n": A.n,
        "a0": A.a0.tolist(),
        "a1": A.a1.tolist(),
        "a2": A.a2.tolist(),
        "a3": A.a3.tolist(),
    }


def from_json_dict(doc: dict) -> QuatMatrix:
    try:
        m, n = int(doc["m"]), int(doc["n"])
        planes = [np.asarray(doc[key], dtype=np.float64) for key in ("a0", "a1", "a2", "a3")]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed quaternion matrix document: {exc}") from exc
    for p in planes:
        if p.shape != (m, n):
            raise ValueError(f"component shape {p.shape} does not match header ({m}, {n})")
    return QuatMatrix(*planes)


def save_json(A: QuatMatrix, path) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(A), fh)


def load_json(path) -> QuatMatrix:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
