"""QsvdTr baseline (truncate, then drop the real part) and the rank sandwich."""

from __future__ import annotations

import warnings
from typing import NamedTuple

from .core import QuatMatrix, pure_part
from .projections import pi1, pi2
from .qsvd import numerical_rank


def qsvd_tr(A: QuatMatrix, r_trunc: int) -> QuatMatrix:
    """Rank-r_trunc truncation followed by removal of the real plane.

    The result is pure but its rank may exceed r_trunc (up to 4x).
    """
    return pi2(pi1(A, r_trunc))


def truncation_rank(target_rank: int, convention: str) -> int:
    """Truncation rank for a target output rank.

    Convention "a" truncates at the target rank itself (the result may then
    exceed the target); convention "b" truncates at floor(target/4), at
    least 1, so the pure result provably has rank <= target.
    """
    if target_rank < 1:
        raise ValueError("target rank must be positive")
    if convention == "a":
        return target_rank
    if convention == "b":
        return max(1, target_rank // 4)
    raise ValueError(f"unknown convention {convention!r} (expected 'a' or 'b')")


class RankBounds(NamedTuple):
    r: int
    r_pure: int
    ok: bool


def rank_bounds_check(A: QuatMatrix, rel_tol: float = 1e-10) -> RankBounds:
    """Check r <= rank(pure_part(A)) <= 4r for r = rank(A).

    Warns (but still checks) when rank(A) exceeds min(m, n)/4, the
    hypothesis under which the sandwich is guaranteed.
    """
    r = numerical_rank(A, rel_tol)
    if r > min(A.shape) / 4:
        warnings.warn(
            f"rank {r} exceeds min(m, n)/4 = {min(A.shape) / 4:.1f}; "
            "the sandwich bound is not guaranteed",
            stacklevel=2,
        )
    r_pure = numerical_rank(pure_part(A), rel_tol)
    return RankBounds(r=r, r_pure=r_pure, ok=r <= r_pure <= 4 * r)
