"""Matrix operations over a Field, backed by the fast kernels.

All functions take int64 numpy arrays of canonical field elements (use
``as_matrix`` to convert nested sequences).  Requires a field with
characteristic 2 or a prime field; odd-characteristic extension fields
have no vectorized path.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .galois import Field

_ctx_cache: dict[tuple[int, int], _kernels.KernelCtx] = {}


def ctx_for(field: Field) -> _kernels.KernelCtx:
    key = (field.q, field.modulus)
    ctx = _ctx_cache.get(key)
    if ctx is None:
        ctx = _kernels.make_ctx(field)
        _ctx_cache[key] = ctx
    return ctx


def as_matrix(rows) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return a


def rref(a: np.ndarray, field: Field):
    """Reduced row echelon form (copy).  Returns (R, rank, pivot_cols)."""
    m = np.array(a, dtype=np.int64)
    rank, piv = _kernels.rref(m, ctx_for(field))
    return m, rank, piv


def rank(a: np.ndarray, field: Field) -> int:
    m = np.array(a, dtype=np.int64)
    rk, _ = _kernels.rref(m, ctx_for(field))
    return rk


def matmul(a: np.ndarray, b: np.ndarray, field: Field) -> np.ndarray:
    return _kernels.matmul(
        np.ascontiguousarray(a, dtype=np.int64),
        np.ascontiguousarray(b, dtype=np.int64),
        ctx_for(field),
    )


def neg(a: np.ndarray, field: Field) -> np.ndarray:
    if field.p == 2:
        return a
    return (-a) % field.p


def solve(a: np.ndarray, b: np.ndarray, field: Field):
    """Solve a @ X = b.  Returns X or None if the system is inconsistent.

    When the solution is not unique, free variables are set to zero.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    ncols = a.shape[1]
    aug = np.concatenate([a, b], axis=1)
    red, rk, piv = rref(aug, field)
    if any(pc >= ncols for pc in piv):
        return None
    x = np.zeros((ncols, b.shape[1]), dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc, :] = red[row, ncols:]
    return x


def right_nullspace(a: np.ndarray, field: Field) -> np.ndarray:
    """Rows form a basis of {v : a @ v = 0}."""
    a = as_matrix(a)
    ncols = a.shape[1]
    red, rk, piv = rref(a, field)
    piv_set = set(int(c) for c in piv)
    free = [c for c in range(ncols) if c not in piv_set]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(piv):
            basis[i, pc] = neg(red[row, fc], field)
    return basis
