"""Quaternion singular value decomposition by one-sided Jacobi.

The working matrix starts as A and is repeatedly right-multiplied by 2x2
quaternion rotations that orthogonalize column pairs; the rotations are
accumulated into V.  At convergence the columns of the working matrix are
sigma_i * u_i and A = U diag(sigma) V*.  Everything runs directly in
quaternion arithmetic (four real planes), so singular vectors come out as
genuine quaternion columns with no degenerate-subspace pairing step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .core import QuatMatrix, conj_transpose

DEFAULT_MAX_SWEEPS = 60
DEFAULT_SWEEP_TOL = 1e-14


class JacobiConvergenceError(RuntimeError):
    """The Jacobi sweeps did not reach tolerance within the sweep budget."""


@dataclass(frozen=True)
class QsvdFactors:
    """Thin QSVD factors: A = U diag(sigma) V* with k = min(m, n) columns."""

    U: QuatMatrix
    sigma: np.ndarray
    V: QuatMatrix


@njit(cache=True, fastmath=True)
def _jacobi_sweeps(Wt, Vt, max_sweeps, tol_rel):  # pragma: no cover - jit
    """Cyclic one-sided Jacobi on column-major storage.

    Wt is (4, n, m): row p holds column p of the working matrix, so the
    innermost loops run over contiguous memory.  Vt is (4, n, n) and starts
    as the identity.  Columns are visited largest-norm first each sweep
    (de Rijk pivoting).  Convergence: Frobenius norm of the off-diagonal
    Gram part below tol_rel * ||A||_F^2.
    """
    n, m = Wt.shape[1], Wt.shape[2]
    nv = Vt.shape[2]
    frob2 = 0.0
    for c in range(4):
        for p in range(n):
            for i in range(m):
                frob2 += Wt[c, p, i] * Wt[c, p, i]
    tol_total = tol_rel * frob2
    # pairs whose two column norms are both below theta cannot move the
    # off-diagonal mass past tol_total; they are skipped via Cauchy-Schwarz
    theta = tol_total * 1e-3
    norms2 = np.zeros(n)
    off = 0.0
    for sweep in range(max_sweeps):
        for p in range(n):
            acc = 0.0
            for c in range(4):
                for i in range(m):
                    acc += Wt[c, p, i] * Wt[c, p, i]
            norms2[p] = acc
        order = np.argsort(-norms2, kind="mergesort")
        off2 = 0.0
        for ip in range(n - 1):
            for iq in range(ip + 1, n):
                p = order[ip]
                q = order[iq]
                if norms2[p] <= theta and norms2[q] <= theta:
                    off2 += 2.0 * norms2[p] * norms2[q]
                    continue
                a = 0.0
                b = 0.0
                g0 = 0.0
                g1 = 0.0
                g2 = 0.0
                g3 = 0.0
                for i in range(m):
                    p0 = Wt[0, p, i]
                    p1 = Wt[1, p, i]
                    p2 = Wt[2, p, i]
                    p3 = Wt[3, p, i]
                    q0 = Wt[0, q, i]
                    q1 = Wt[1, q, i]
                    q2 = Wt[2, q, i]
                    q3 = Wt[3, q, i]
                    a += p0 * p0 + p1 * p1 + p2 * p2 + p3 * p3
                    b += q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3
                    g0 += p0 * q0 + p1 * q1 + p2 * q2 + p3 * q3
                    g1 += p0 * q1 - p1 * q0 - p2 * q3 + p3 * q2
                    g2 += p0 * q2 + p1 * q3 - p2 * q0 - p3 * q1
                    g3 += p0 * q3 - p1 * q2 + p2 * q1 - p3 * q0
                gg = g0 * g0 + g1 * g1 + g2 * g2 + g3 * g3
                off2 += 2.0 * gg
                norms2[p] = a
                norms2[q] = b
                # already orthogonal at working precision
                if gg <= 1e-300 or gg <= 1e-30 * a * b:
                    continue
                g = np.sqrt(gg)
                u0 = g0 / g
                u1 = g1 / g
                u2 = g2 / g
                u3 = g3 / g
                zeta = (b - a) / (2.0 * g)
                if zeta >= 0.0:
                    t = 1.0 / (zeta + np.sqrt(1.0 + zeta * zeta))
                else:
                    t = -1.0 / (-zeta + np.sqrt(1.0 + zeta * zeta))
                cth = 1.0 / np.sqrt(1.0 + t * t)
                sth = t * cth
                norms2[p] = a - t * g
                norms2[q] = b + t * g
                # column pair times [[c, s], [-s u*, c u*]]
                for i in range(m):
                    p0 = Wt[0, p, i]
                    p1 = Wt[1, p, i]
                    p2 = Wt[2, p, i]
                    p3 = Wt[3, p, i]
                    q0 = Wt[0, q, i]
                    q1 = Wt[1, q, i]
                    q2 = Wt[2, q, i]
                    q3 = Wt[3, q, i]
                    r0 = q0 * u0 + q1 * u1 + q2 * u2 + q3 * u3
                    r1 = -q0 * u1 + q1 * u0 - q2 * u3 + q3 * u2
                    r2 = -q0 * u2 + q1 * u3 + q2 * u0 - q3 * u1
                    r3 = -q0 * u3 - q1 * u2 + q2 * u1 + q3 * u0
                    Wt[0, p, i] = cth * p0 - sth * r0
                    Wt[1, p, i] = cth * p1 - sth * r1
                    Wt[2, p, i] = cth * p2 - sth * r2
                    Wt[3, p, i] = cth * p3 - sth * r3
                    Wt[0, q, i] = sth * p0 + cth * r0
                    Wt[1, q, i] = sth * p1 + cth * r1
                    Wt[2, q, i] = sth * p2 + cth * r2
                    Wt[3, q, i] = sth * p3 + cth * r3
                for i in range(nv):
                    p0 = Vt[0, p, i]
                    p1 = Vt[1, p, i]
                    p2 = Vt[2, p, i]
                    p3 = Vt[3, p, i]
                    q0 = Vt[0, q, i]
                    q1 = Vt[1, q, i]
                    q2 = Vt[2, q, i]
                    q3 = Vt[3, q, i]
                    r0 = q0 * u0 + q1 * u1 + q2 * u2 + q3 * u3
                    r1 = -q0 * u1 + q1 * u0 - q2 * u3 + q3 * u2
                    r2 = -q0 * u2 + q1 * u3 + q2 * u0 - q3 * u1
                    r3 = -q0 * u3 - q1 * u2 + q2 * u1 + q3 * u0
                    Vt[0, p, i] = cth * p0 - sth * r0
                    Vt[1, p, i] = cth * p1 - sth * r1
                    Vt[2, p, i] = cth * p2 - sth * r2
                    Vt[3, p, i] = cth * p3 - sth * r3
                    Vt[0, q, i] = sth * p0 + cth * r0
                    Vt[1, q, i] = sth * p1 + cth * r1
                    Vt[2, q, i] = sth * p2 + cth * r2
                    Vt[3, q, i] = sth * p3 + cth * r3
        off = np.sqrt(off2)
        if off <= tol_total:
            return sweep + 1, off, True
    return max_sweeps, off, False


def _qdot_rows(ut: np.ndarray, vt: np.ndarray) -> np.ndarray:
    """u* v for quaternion columns stored as (4, m) rows; returns 4 reals."""
    u0, u1, u2, u3 = ut
    v0, v1, v2, v3 = vt
    return np.array([
        (u0 * v0 + u1 * v1 + u2 * v2 + u3 * v3).sum(),
        (u0 * v1 - u1 * v0 - u2 * v3 + u3 * v2).sum(),
        (u0 * v2 + u1 * v3 - u2 * v0 - u3 * v1).sum(),
        (u0 * v3 - u1 * v2 + u2 * v1 - u3 * v0).sum(),
    ])


def _right_scale(col: np.ndarray, coef: np.ndarray) -> np.ndarray:
    """Entrywise right multiplication col * coef for a (4, m) column."""
    a0, a1, a2, a3 = col
    b0, b1, b2, b3 = coef
    return np.stack([
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ])


def _complete_columns(Ut: np.ndarray, reliable: np.ndarray) -> None:
    """Replace unreliable rows of Ut (4, k, m) with an orthonormal completion.

    Candidates are standard basis vectors, orthogonalized (two modified
    Gram-Schmidt passes, coefficients multiplied on the right) against all
    previously accepted columns.
    """
    k, m = Ut.shape[1], Ut.shape[2]
    accepted = [t for t in range(k) if reliable[t]]
    for t in range(k):
        if reliable[t]:
            continue
        chosen = None
        for cand in range(m):
            v = np.zeros((4, m))
            v[0, cand] = 1.0
            for _ in range(2):
                for s in accepted:
                    coef = _qdot_rows(Ut[:, s, :], v)
                    v = v - _right_scale(Ut[:, s, :], coef)
            nv = float(np.sqrt((v ** 2).sum()))
            if nv >= 0.5 / np.sqrt(m):
                chosen = v / nv
                break
        if chosen is None:  # cannot happen while len(accepted) < m
            raise JacobiConvergenceError("failed to complete an orthonormal basis")
        Ut[:, t, :] = chosen
        accepted.append(t)


def _fix_phases(Ut: np.ndarray, Vt: np.ndarray) -> None:
    """Sign convention: the first nonzero component of each u_i, scanned in
    (component, row) order, is made nonnegative by flipping the (u_i, v_i)
    pair by the unit phase -1 when needed."""
    for t in range(Ut.shape[1]):
        flat = Ut[:, t, :].ravel()
        nz = np.flatnonzero(np.abs(flat) > 1e-12)
        if nz.size and flat[nz[0]] < 0.0:
            Ut[:, t, :] *= -1.0
            Vt[:, t, :] *= -1.0


def qsvd(A: QuatMatrix, max_sweeps: int = DEFAULT_MAX_SWEEPS,
         tol: float = DEFAULT_SWEEP_TOL) -> QsvdFactors:
    """Thin quaternion SVD with descending singular values.

    Deterministic for a fixed input: fixed sweep order and a fixed sign
    convention on the singular vector pairs.  Raises JacobiConvergenceError
    if the sweep budget is exhausted.
    """
    if A.m < 1 or A.n < 1:
        raise ValueError("empty matrix")
    if A.m < A.n:
        f = qsvd(conj_transpose(A), max_sweeps=max_sweeps, tol=tol)
        return QsvdFactors(U=f.V, sigma=f.sigma, V=f.U)

    m, n = A.shape
    Wt = np.ascontiguousarray(A.comps.transpose(0, 2, 1))
    Vt = np.zeros((4, n, n))
    Vt[0] = np.eye(n)
    _, off, ok = _jacobi_sweeps(Wt, Vt, max_sweeps, tol)
    if not ok:
        raise JacobiConvergenceError(
            f"one-sided Jacobi did not converge in {max_sweeps} sweeps "
            f"(off-diagonal mass {off:.3e})"
        )

    sigma = np.sqrt((Wt ** 2).sum(axis=(0, 2)))
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    Ut = np.ascontiguousarray(Wt[:, order, :])
    Vt = np.ascontiguousarray(Vt[:, order, :])

    floor = max(m, n) * np.finfo(np.float64).eps * (sigma[0] if sigma.size else 0.0)
    reliable = sigma > floor
    Ut[:, reliable, :] /= sigma[reliable][None, :, None]
    if not reliable.all():
        _complete_columns(Ut, reliable)
    _fix_phases(Ut, Vt)

    U = QuatMatrix.from_stack(Ut.transpose(0, 2, 1))
    V = QuatMatrix.from_stack(Vt.transpose(0, 2, 1))
    return QsvdFactors(U=U, sigma=sigma, V=V)


def truncate(F: QsvdFactors, r: int) -> QuatMatrix:
    """Sum of the leading r terms sigma_i u_i v_i*."""
    k = F.sigma.size
    if not 1 <= r <= k:
        raise ValueError(f"truncation rank {r} out of range [1, {k}]")
    u = F.U.comps[:, :, :r]
    v = F.V.comps[:, :, :r]
    us = u * F.sigma[:r][None, None, :]
    # (U_r diag(sigma)) @ V_r*
    a0, a1, a2, a3 = us
    b0, b1, b2, b3 = v[0].T, -v[1].T, -v[2].T, -v[3].T
    return QuatMatrix(
        a0 @ b0 - a1 @ b1 - a2 @ b2 - a3 @ b3,
        a0 @ b1 + a1 @ b0 + a2 @ b3 - a3 @ b2,
        a0 @ b2 - a1 @ b3 + a2 @ b0 + a3 @ b1,
        a0 @ b3 + a1 @ b2 - a2 @ b1 + a3 @ b0,
    )


def numerical_rank(A: QuatMatrix, rel_tol: float = 1e-10) -> int:
    """Count of singular values above rel_tol * sigma_1 (0 for the zero matrix)."""
    sigma = qsvd(A).sigma
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0
    return int((sigma > rel_tol * sigma[0]).sum())
