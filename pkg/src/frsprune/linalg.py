"""Gaussian elimination over F_q.

Two routes live here. ``reduce_system`` works on small augmented systems held
as tuples of Python ints; it is the hot path of conditioning and intersection
and is what the field-operation counter instruments. ``rref`` works on numpy
matrices and serves the larger interpolation systems.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass

import numpy as np

from .gf import inv


@dataclass
class FieldOpCounter:
    ops: int = 0


_counter: contextvars.ContextVar[FieldOpCounter | None] = contextvars.ContextVar(
    "field_op_counter", default=None
)


@contextlib.contextmanager
def count_field_ops():
    """Count field multiplications/inversions done by ``reduce_system`` in this block."""
    counter = FieldOpCounter()
    token = _counter.set(counter)
    try:
        yield counter
    finally:
        _counter.reset(token)


INCONSISTENT = None


def reduce_system(rows, nvars: int, q: int):
    """Reduce an augmented system ``[A | b]`` to RREF.

    Each row has ``nvars`` coefficients followed by the right-hand side.
    Returns a tuple of nonzero RREF rows (pivot entries 1, pivots strictly
    increasing), or ``None`` if the system has no solution.
    """
    mat = [list(r) for r in rows]
    nops = 0
    out_rows = []
    pivot_row = 0
    nrows = len(mat)
    for col in range(nvars):
        sel = -1
        for r in range(pivot_row, nrows):
            if mat[r][col] % q:
                sel = r
                break
        if sel < 0:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        prow = mat[pivot_row]
        s = inv(prow[col], q)
        prow = [x * s % q for x in prow]
        mat[pivot_row] = prow
        nops += len(prow) + 1
        for r in range(nrows):
            if r == pivot_row:
                continue
            f = mat[r][col] % q
            if f:
                row = mat[r]
                mat[r] = [(a - f * b) % q for a, b in zip(row, prow)]
                nops += len(prow)
        pivot_row += 1
        if pivot_row == nrows:
            break
    counter = _counter.get()
    if counter is not None:
        counter.ops += nops
    for r in range(nrows):
        row = mat[r]
        if r < pivot_row:
            out_rows.append(tuple(x % q for x in row))
        elif row[nvars] % q:
            return INCONSISTENT
    return tuple(out_rows)


def pivots_of(rows) -> list[int]:
    """Pivot column of each row of an RREF system."""
    out = []
    for row in rows:
        for j, x in enumerate(row):
            if x:
                out.append(j)
                break
    return out


def solve_affine(rows, nvars: int, q: int):
    """Solution set of a consistent RREF system as (particular, [directions]).

    Vectors are tuples of length ``nvars``; directions are one per free
    variable, in increasing free-variable order.
    """
    piv = pivots_of(rows)
    free = [j for j in range(nvars) if j not in set(piv)]
    particular = [0] * nvars
    for p, row in zip(piv, rows):
        particular[p] = row[nvars]
    directions = []
    for f in free:
        v = [0] * nvars
        v[f] = 1
        for p, row in zip(piv, rows):
            v[p] = -row[f] % q
        directions.append(tuple(v))
    return tuple(particular), directions


def rref(M, q: int):
    """RREF of an integer matrix over F_q; returns (R, pivot_columns)."""
    R = np.array(M, dtype=np.int64) % q
    nrows, ncols = R.shape
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        if pr == nrows:
            break
        nz = np.nonzero(R[pr:, col])[0]
        if nz.size == 0:
            continue
        sel = pr + int(nz[0])
        if sel != pr:
            R[[pr, sel]] = R[[sel, pr]]
        R[pr] = R[pr] * inv(int(R[pr, col]), q) % q
        f = R[:, col].copy()
        f[pr] = 0
        R = (R - np.outer(f, R[pr])) % q
        pivots.append(col)
        pr += 1
    return R, pivots


def nullspace(M, q: int) -> np.ndarray:
    """Basis of the right kernel of ``M`` over F_q, one vector per row."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(M, q)
    free = [j for j in range(ncols) if j not in set(piv)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, p in enumerate(piv):
            basis[t, p] = -R[i, f] % q
    return basis


def rank(M, q: int) -> int:
    M = np.asarray(M, dtype=np.int64)
    if M.size == 0:
        return 0
    return len(rref(M, q)[1])
