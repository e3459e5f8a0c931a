"""Backend agreement: the jitted kernels and the numpy fallback must
produce bit-identical results."""

import numpy as np
import pytest

from lrcdec import _kernels, linalg
from lrcdec.galois import Field


def _rref_numpy(mat, ctx):
    m = mat.copy()
    piv = np.full(m.shape[0], -1, dtype=np.int64)
    rank = _kernels._rref_np(m, piv, ctx)
    return m, rank, piv[:rank]


@pytest.mark.parametrize("q", [2, 16, 1024, 7])
def test_rref_backends_agree(q):
    field = Field(q)
    ctx = linalg.ctx_for(field)
    rng = np.random.default_rng(q)
    for shape in [(5, 8), (8, 5), (6, 6), (1, 3), (4, 12)]:
        a = rng.integers(0, q, size=shape, dtype=np.int64)
        m1 = a.copy()
        piv1 = np.full(shape[0], -1, dtype=np.int64)
        if _kernels.BACKEND == "numba":
            r1 = _kernels._rref_nb(m1, piv1, ctx.mode, ctx.q, ctx.p, ctx.exp, ctx.log)
        else:
            r1 = _kernels._rref_np(m1, piv1, ctx)
        m2, r2, piv2 = _rref_numpy(a, ctx)
        assert r1 == r2
        assert np.array_equal(m1, m2)
        assert np.array_equal(piv1[:r1], piv2)


@pytest.mark.parametrize("q", [16, 7])
def test_matmul_backends_agree(q):
    field = Field(q)
    ctx = linalg.ctx_for(field)
    rng = np.random.default_rng(q + 1)
    a = rng.integers(0, q, size=(6, 4), dtype=np.int64)
    b = rng.integers(0, q, size=(4, 5), dtype=np.int64)
    got = _kernels.matmul(a, b, ctx)
    ref = np.zeros((6, 5), dtype=np.int64)
    _kernels._matmul_np(a, b, ref, ctx)
    assert np.array_equal(got, ref)
    # against scalar arithmetic
    for i in range(6):
        for j in range(5):
            acc = 0
            for l in range(4):
                acc = field.add(acc, field.mul(int(a[i, l]), int(b[l, j])))
            assert acc == got[i, j]


@pytest.mark.parametrize("q", [16, 13])
def test_solve_and_nullspace(q):
    field = Field(q)
    rng = np.random.default_rng(5)
    a = rng.integers(0, q, size=(6, 9), dtype=np.int64)
    ns = linalg.right_nullspace(a, field)
    assert ns.shape[0] == 9 - linalg.rank(a, field)
    assert not linalg.matmul(a, ns.T, field).any()

    x_true = rng.integers(0, q, size=(9, 2), dtype=np.int64)
    b = linalg.matmul(a, x_true, field)
    x = linalg.solve(a, b, field)
    assert x is not None
    assert np.array_equal(linalg.matmul(a, x, field), b)


def test_solve_inconsistent():
    field = Field(16)
    a = np.array([[1, 0], [2, 0], [0, 0]], dtype=np.int64)
    b = np.array([[0], [0], [1]], dtype=np.int64)
    assert linalg.solve(a, b, field) is None


def test_odd_extension_field_has_no_kernel_ctx():
    with pytest.raises(NotImplementedError):
        _kernels.make_ctx(Field(9))
