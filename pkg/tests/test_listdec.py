import math
import random
from fractions import Fraction

import numpy as np
import pytest

from lrcdec import DecodeConfig, BudgetExceeded, list_decode_lrc, unique_decode_probabilistic
from lrcdec.listdec import (
    interleaved_success_prob,
    pe_tilde,
    success_prob_general,
    success_prob_grs,
)
from lrcdec.radii import CodeShape, list_size_bounds

CFG = DecodeConfig(t_l=1, t_g=5)


def corrupt(rng, field, word, weight):
    pos = rng.choice(len(word), size=weight, replace=False)
    w = list(word)
    for p in pos:
        w[p] = field.add(w[p], int(rng.integers(1, field.q)))
    return tuple(w)


# -- list decoder ------------------------------------------------------------------

def test_zero_error_list_is_exact(tb_15_6):
    cw = tb_15_6.encode([1, 2, 3, 4, 5, 6])
    out = list_decode_lrc(tb_15_6, cw, CFG)
    assert out.codewords == [cw]
    assert out.complete


def test_weight5_containment_seeded(tb_15_6):
    for i in range(100):
        rng = np.random.default_rng([2024, i])
        msg = rng.integers(0, 16, size=6).tolist()
        cw = tb_15_6.encode(msg)
        w = corrupt(rng, tb_15_6.field, cw, 5)
        out = list_decode_lrc(tb_15_6, w, CFG)
        assert cw in out.codewords
        assert all(
            sum(1 for a, b in zip(c, w) if a != b) <= 5 and tb_15_6.is_codeword(c)
            for c in out.codewords
        )


def test_list_size_within_bounds(tb_15_6):
    shape = CodeShape(15, 6, 3, 3)
    basic, improved = list_size_bounds(shape, t_l=1)
    rng = np.random.default_rng(7)
    for _ in range(50):
        cw = tb_15_6.encode(rng.integers(0, 16, size=6).tolist())
        w = corrupt(rng, tb_15_6.field, cw, int(rng.integers(0, 6)))
        out = list_decode_lrc(tb_15_6, w, CFG)
        assert len(out.codewords) <= improved <= basic


def test_cfg_validation(tb_15_6):
    with pytest.raises(ValueError):
        list_decode_lrc(tb_15_6, (0,) * 15, DecodeConfig(t_l=2, t_g=5))
    with pytest.raises(ValueError):
        list_decode_lrc(tb_15_6, (0,) * 15, DecodeConfig(t_l=1, t_g=6))


def test_budget_exceeded_carries_partial(tb_15_6):
    rng = np.random.default_rng(3)
    cw = tb_15_6.encode(rng.integers(0, 16, size=6).tolist())
    w = corrupt(rng, tb_15_6.field, cw, 5)
    with pytest.raises(BudgetExceeded) as exc:
        list_decode_lrc(tb_15_6, w, DecodeConfig(t_l=1, t_g=5, budget=0))
    assert exc.value.partial.complete is False
    assert exc.value.partial.shortened_decodes >= 1


def test_stats_populated(tb_15_6):
    cw = tb_15_6.encode([0, 1, 2, 3, 4, 5])
    out = list_decode_lrc(tb_15_6, cw, CFG)
    assert out.local_list_sizes == [1, 1, 1]
    assert out.shortened_decodes >= 1


# -- probabilistic unique decoder ----------------------------------------------------

def test_unique_zero_errors(tb_15_6):
    cw = tb_15_6.encode([9, 8, 7, 6, 5, 4])
    assert unique_decode_probabilistic(tb_15_6, cw, CFG) == cw


def test_unique_success_rate_meets_bound(tb_15_6):
    shape = CodeShape(15, 6, 3, 3)
    bound = float(success_prob_grs(shape, 16, 1, 5))
    trials, ok = 400, 0
    for i in range(trials):
        rng = np.random.default_rng([99, i])
        cw = tb_15_6.encode(rng.integers(0, 16, size=6).tolist())
        w = corrupt(rng, tb_15_6.field, cw, 5)
        ok += unique_decode_probabilistic(tb_15_6, w, CFG) == cw
    rate = ok / trials
    sigma3 = 3 * math.sqrt(max(bound * (1 - bound), 1e-9) / trials)
    assert rate >= bound - sigma3


def test_unique_consistent_with_list(tb_15_6):
    # when the unique decoder returns the transmitted word, the list contains it
    for i in range(60):
        rng = np.random.default_rng([5, i])
        cw = tb_15_6.encode(rng.integers(0, 16, size=6).tolist())
        w = corrupt(rng, tb_15_6.field, cw, int(rng.integers(0, 6)))
        got = unique_decode_probabilistic(tb_15_6, w, CFG)
        if got == cw:
            assert cw in list_decode_lrc(tb_15_6, w, CFG).codewords


def test_unique_rate_monotone_in_weight(tb_15_6):
    trials = 300
    rates = []
    for weight in range(6):
        ok = 0
        for i in range(trials):
            rng = np.random.default_rng([11, weight, i])
            cw = tb_15_6.encode(rng.integers(0, 16, size=6).tolist())
            w = corrupt(rng, tb_15_6.field, cw, weight)
            ok += unique_decode_probabilistic(tb_15_6, w, CFG) == cw
        rates.append(ok / trials)
    noise = 3 * math.sqrt(0.25 / trials)
    assert all(b <= a + noise for a, b in zip(rates, rates[1:]))


def test_adversarial_local_miscorrection(tb_15_6, gf16):
    # plant a second local codeword within t_l of the corrupted repair set:
    # the decoder may fail or miscorrect but never crashes, and the forced
    # choice can only confuse the planted repair set
    cw = tb_15_6.encode([1, 0, 0, 0, 0, 0])
    other = tb_15_6.encode([1, 0, 2, 0, 0, 0])  # differs inside repair sets
    local0 = tb_15_6.repair_sets[0]
    diff = [i for i in local0 if cw[i] != other[i]]
    assert len(diff) >= 3
    w = list(cw)
    for i in diff[:-1]:  # move within distance 1 of the wrong local word
        w[i] = other[i]
    got = unique_decode_probabilistic(tb_15_6, tuple(w), CFG)
    assert got is None or tb_15_6.is_codeword(got)


# -- probability formulas ---------------------------------------------------------

def test_pe_tilde_single_term():
    assert pe_tilde(10, 5, 16, 0) == Fraction(1, 15**4)


def test_pe_tilde_exactness_small():
    # n=4, d=3, q=4, t=2: 1/3^2 * (1 + 3*4 + 9*6)
    assert pe_tilde(4, 3, 4, 2) == Fraction(1 + 12 + 54, 9)


def test_pe_tilde_radius_exceeds_length():
    with pytest.raises(ValueError):
        pe_tilde(5, 3, 16, 6)


def test_success_prob_general_trivial():
    assert success_prob_general(3, 5, 1, 0.0, 1.0, 1.0) == 1.0
    # p_e = 0 leaves only the uniqueness factors
    assert success_prob_general(3, 5, 1, 0.0, 0.9, 0.8) == pytest.approx(0.9 * 0.8)


def test_general_matches_grs_instantiation():
    shape = CodeShape(15, 6, 3, 3)
    q, t_l, bar = 16, 1, 5
    p_loc = pe_tilde(shape.n_l, shape.rho, q, t_l)
    n_short = (bar // (t_l + 1)) * shape.n_l
    p_glob = pe_tilde(n_short, shape.d, q, bar)
    f = bar // (t_l + 1)
    lhs = (1 - p_loc) ** f * (1 - p_loc) ** (shape.mu - f) * (1 - p_glob)
    assert lhs == success_prob_grs(shape, q, t_l, bar)


def test_success_prob_grs_increases_with_q():
    shape = CodeShape(63, 16, 8, 14)
    vals = [success_prob_grs(shape, q, 8, 24) for q in (64, 128, 256)]
    assert vals[0] < vals[1] < vals[2]


def test_interleaved_success_prob():
    shape = CodeShape(15, 6, 3, 3)
    # all component probabilities 1: only the miscorrection factor remains
    only_first = interleaved_success_prob(shape, 2, 16, 1, 5, 1.0, 1.0)
    assert only_first == pytest.approx(float((1 - pe_tilde(5, 3, 16**2, 1)) ** 2))
    # exponent bookkeeping: factors account for all mu repair sets
    f = 5 // 2
    assert f + (shape.mu - f) == shape.mu


def test_interleaved_matches_single_degree_form():
    shape = CodeShape(15, 6, 3, 3)
    q, t_l, t_g = 16, 1, 5
    p_loc_unique = float(1 - pe_tilde(shape.n_l, shape.rho, q, t_l))
    p_glob = float(1 - pe_tilde((t_g // (t_l + 1)) * shape.n_l, shape.d, q, t_g))
    got = interleaved_success_prob(shape, 1, q, t_l, t_g, p_loc_unique, p_glob)
    ref = success_prob_general(
        shape.mu, t_g, t_l, float(pe_tilde(shape.n_l, shape.rho, q, t_l)),
        p_loc_unique, p_glob,
    )
    assert got == pytest.approx(ref)
