"""The two metric projections used by the alternating scheme."""

from __future__ import annotations

from .core import QuatMatrix, pure_part
from .qsvd import qsvd, truncate


def pi1(X: QuatMatrix, r: int) -> QuatMatrix:
    """Projection onto the fixed-rank set: rank-r QSVD truncation."""
    if not 1 <= r <= min(X.m, X.n):
        raise ValueError(f"rank {r} out of range [1, {min(X.m, X.n)}]")
    return truncate(qsvd(X), r)


def pi2(X: QuatMatrix) -> QuatMatrix:
    """Projection onto the pure quaternion subspace: drop the real plane."""
    return pure_part(X)
