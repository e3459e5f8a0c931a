import random

import pytest

from lrcdec import Field, construct_tamo_barg, optimal_distance
from lrcdec.lrc import LrcCode


def test_optimal_distance_values():
    assert optimal_distance(63, 16, 8, 14) == 35
    assert optimal_distance(15, 6, 3, 3) == 8
    # r = k: MDS, no locality penalty
    assert optimal_distance(20, 5, 5, 4) == 16


def test_construct_basic(tb_15_6):
    code = tb_15_6
    assert code.d == 8
    assert code.supercode.k == 8
    assert code.mu == 3 and code.n_l == 5
    assert code.encode([0] * 6) == (0,) * 15


def test_constructor_divisibility_errors(gf16):
    with pytest.raises(ValueError):
        construct_tamo_barg(gf16, 15, 5, 3, 3)  # r does not divide k
    with pytest.raises(ValueError):
        construct_tamo_barg(gf16, 10, 6, 3, 3)  # n_l does not divide n
    with pytest.raises(ValueError):
        construct_tamo_barg(Field(32), 15, 6, 3, 3)  # n does not divide q-1


def test_local_restrictions_are_local_codewords(tb_15_6):
    rnd = random.Random(0)
    for _ in range(100):
        msg = [rnd.randrange(16) for _ in range(6)]
        cw = tb_15_6.encode(msg)
        for j in range(3):
            assert tb_15_6.local_code(j).is_codeword(tb_15_6.restrict(cw, j))


def test_restriction_partition_recovers_word(tb_15_6):
    cw = tb_15_6.encode([1, 2, 3, 4, 5, 6])
    rebuilt = [None] * 15
    for j in range(3):
        for pos, sym in zip(tb_15_6.repair_sets[j], tb_15_6.restrict(cw, j)):
            rebuilt[pos] = sym
    assert tuple(rebuilt) == cw
    assert tb_15_6.restrict((0,) * 15, 1) == (0,) * 5


def test_subcode_of_supercode(tb_15_6):
    rnd = random.Random(1)
    for _ in range(100):
        cw = tb_15_6.encode([rnd.randrange(16) for _ in range(6)])
        assert tb_15_6.supercode.is_codeword(cw)
        assert tb_15_6.is_codeword(cw)


def test_membership_rejects_supercode_non_members(tb_15_6, gf16):
    # a supercode word using a forbidden monomial is not an LRC word
    from lrcdec.galois import Poly

    f = Poly(gf16, (0, 0, 0, 1))  # x^3, degree 3 not in the support
    w = tb_15_6.supercode.encode(f)
    assert tb_15_6.supercode.is_codeword(w)
    assert not tb_15_6.is_codeword(w)


def test_local_distance_exhaustive(tb_15_6):
    # one repair set, all 16^3 local codewords: minimum nonzero weight is rho = 3
    local = tb_15_6.local_code(0)
    weights = set()
    for a in range(16):
        for b in range(16):
            for c in range(16):
                w = sum(1 for s in local.encode([a, b, c]) if s)
                if w:
                    weights.add(w)
    assert min(weights) == 3


def test_global_distance_sandwich(tb_15_6, gf16):
    # random-sampling lower bound on the minimum weight
    rnd = random.Random(2)
    min_w = 15
    for _ in range(3000):
        msg = [rnd.randrange(16) for _ in range(6)]
        if all(m == 0 for m in msg):
            continue
        w = sum(1 for s in tb_15_6.encode(msg) if s)
        min_w = min(min_w, w)
    assert min_w >= tb_15_6.d == 8
    # the bound is met with equality: a polynomial vanishing on one whole
    # repair-set coset and two further locators has weight exactly 8
    from lrcdec.galois import Poly

    F = gf16
    coset0 = [tb_15_6.supercode.locators[i] for i in tb_15_6.repair_sets[0]]
    c = F.pow(coset0[0], 5)
    f = Poly(F, (F.neg(c), 0, 0, 0, 0, 1))  # x^5 - c
    for root in (tb_15_6.supercode.locators[5], tb_15_6.supercode.locators[10]):
        f = f * Poly(F, (F.neg(root), 1))
    w = tb_15_6.supercode.encode(f)
    assert tb_15_6.is_codeword(w)
    assert sum(1 for s in w if s) == 8


def test_message_layout(tb_15_6, gf16):
    # symbol (i, j) -> coefficient of x^(i + 5 j), row-major message order
    msg = [0] * 6
    msg[1] = 7  # i = 0, j = 1 -> degree 5
    f = tb_15_6.message_poly(msg)
    assert f.coeffs[5] == 7 and sum(1 for c in f.coeffs if c) == 1


def test_json_roundtrip(tb_15_6):
    code = LrcCode.from_json(tb_15_6.to_json())
    msg = [3, 1, 4, 1, 5, 9]
    assert code.encode(msg) == tb_15_6.encode(msg)


def test_validation_rejects_broken_partition(tb_15_6):
    obj = tb_15_6.to_json()
    obj["repair_sets"] = [list(range(5)), list(range(5, 10)), list(range(9, 14))]
    with pytest.raises(ValueError):
        LrcCode.from_json(obj)


def test_validation_rejects_wrong_local_structure(tb_15_6):
    # shuffling coordinates across repair sets breaks the local GRS property
    obj = tb_15_6.to_json()
    rs = [list(s) for s in tb_15_6.repair_sets]
    rs[0][0], rs[1][0] = rs[1][0], rs[0][0]
    obj["repair_sets"] = rs
    with pytest.raises(ValueError):
        LrcCode.from_json(obj)
