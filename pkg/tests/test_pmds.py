import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from lrcdec import Field, random_pmds, verify_pmds
from lrcdec import linalg
from lrcdec.grs import GrsCode
from lrcdec.interleaved import excess_criterion
from lrcdec.pmds import (
    asymptotic_predicates,
    complement_count_closed_form,
    failure_prob_exact,
    mk_success_prob,
    rank_full_fraction,
    s_mu_size,
    sk1_bound,
    union_bound_failure,
)


# -- verification -------------------------------------------------------------------

def test_mds_code_is_pmds_with_one_repair_set():
    f = Field(16)
    code = GrsCode(f, list(range(7)), [1] * 7, 3)
    g = code.generator_matrix()
    # one repair set, locality r = k = 3, rho = d = 5
    assert verify_pmds(f, g, [tuple(range(7))], 3, 5)


def test_repeated_column_fails():
    f = Field(1024)
    g = np.array([[1, 1, 2, 3, 5, 8], [0, 0, 1, 4, 7, 2]], dtype=np.int64)
    assert not verify_pmds(f, g, [(0, 1, 2), (3, 4, 5)], 2, 2)


def test_random_pmds_double_checked(pmds_12_4):
    code = pmds_12_4
    assert code.verified
    # independently re-verify one random puncturing by minimum distance
    rnd = random.Random(0)
    removed = [rnd.choice(rs) for rs in code.repair_sets]
    kept = [j for j in range(code.n) if j not in removed]
    punct = code.generator[:, kept]
    # punctured [8, 4] must be MDS: enumerate a random sample of messages
    f = code.field
    n2, k2 = punct.shape[1], code.k
    min_w = n2
    for _ in range(2000):
        msg = np.array([[rnd.randrange(f.q) for _ in range(k2)]], dtype=np.int64)
        if not msg.any():
            continue
        w = int((linalg.matmul(msg, punct, f) != 0).sum())
        min_w = min(min_w, w)
    assert min_w >= n2 - k2 + 1  # sampling cannot beat the MDS distance


def test_random_pmds_deterministic():
    a = random_pmds(2**10, 12, 4, 2, 2, seed=7)
    b = random_pmds(2**10, 12, 4, 2, 2, seed=7)
    assert np.array_equal(a.generator, b.generator)
    c = random_pmds(2**10, 12, 4, 2, 2, seed=8)
    assert not np.array_equal(a.generator, c.generator)


def test_random_pmds_tiny_field_fails():
    with pytest.raises(ValueError):
        random_pmds(2, 12, 4, 2, 2, seed=0)


# -- counting ----------------------------------------------------------------------

def test_s_mu_15_8_4_2():
    # exhaustively verified good-set count
    assert s_mu_size(15, 8, 4, 2, 9) == 4375
    assert complement_count_closed_form(15, 8, 4) == 630
    assert math.comb(15, 9) - complement_count_closed_form(15, 8, 4) == 4375
    assert Fraction(4375, math.comb(15, 9)) == Fraction(125, 143)


def test_s_mu_exhaustive():
    rs = [tuple(range(i * 5, (i + 1) * 5)) for i in range(3)]
    count = sum(
        1
        for subset in itertools.combinations(range(15), 9)
        if all(sum(1 for x in subset if x in set(r)) <= 4 for r in rs)
    )
    assert count == s_mu_size(15, 8, 4, 2, 9)


def test_s_mu_no_constraint():
    # r = n_l: every subset qualifies
    assert s_mu_size(12, 4, 3, 1, 5) == math.comb(12, 5)


def test_closed_form_matches_dp_complement():
    for (n, k, r) in [(15, 8, 4), (12, 4, 2), (18, 10, 5), (20, 9, 3)]:
        if n % (r + 1):
            continue
        alt = complement_count_closed_form(n, k, r)
        good = s_mu_size(n, k, r, 2, k + 1)
        assert math.comb(n, k + 1) - good == alt


def test_rank_full_fraction():
    # brute force: all 2^6 binary 3x2 matrices, 42 have rank 2
    count = 0
    for bits in range(64):
        m = np.array([[(bits >> (2 * i + j)) & 1 for j in range(2)] for i in range(3)])
        count += np.linalg.matrix_rank(m.astype(float)) == 2
    assert count == 42
    assert rank_full_fraction(2, 3, 2) == Fraction(42, 64)
    assert rank_full_fraction(16, 5, 0) == 1
    assert rank_full_fraction(7, 1, 1) == Fraction(6, 7)
    assert rank_full_fraction(16, 2, 3) == 0


# -- bounds ------------------------------------------------------------------------

def test_sk1_bound_rho2_collapse():
    n, k, r = 15, 8, 4
    expected = 1 - n * ((k + 1) / n) ** (r + 1)
    assert sk1_bound(n, k, r, 2) == pytest.approx(expected)


def test_sk1_bound_is_lower_bound():
    for (n, k, r, rho) in [(15, 8, 4, 2), (45, 16, 8, 8), (70, 24, 8, 3)]:
        exact_good = 1 - failure_prob_exact(n, k, r, rho, n - k - 1)
        assert float(exact_good) >= sk1_bound(n, k, r, rho) - 1e-12


def test_union_bound_checkpoints():
    ub2 = float(union_bound_failure(70, 24, 8, 3))
    ub3 = float(union_bound_failure(196, 156, 26, 3))
    assert f"{ub2:.2e}" == "1.68e-03"
    assert f"{ub3:.2e}" == "7.71e-02"


def test_union_bound_dominates_exact():
    for (n, k, r, rho) in [(70, 24, 8, 3), (196, 156, 26, 3), (45, 16, 8, 8)]:
        exact = failure_prob_exact(n, k, r, rho, n - k - 1)
        assert exact <= union_bound_failure(n, k, r, rho)


def test_asymptotic_predicates():
    rate, growth = asymptotic_predicates(196, 156, 26, 3, c1=1.05, c2=1.1)
    assert isinstance(rate, bool) and isinstance(growth, bool)
    # low-rate code with large locality satisfies both for c1 = 2:
    # C(10,1)^(-1/9) = 0.774 > 2*25/70 and r+1 = 9 >= 1.4*log2(70)
    assert asymptotic_predicates(70, 24, 8, 3, c1=2.0, c2=1.4) == (True, True)
    with pytest.raises(ValueError):
        asymptotic_predicates(70, 24, 8, 3, c1=1.0, c2=2.0)


# -- exact failure probability -------------------------------------------------------

PAPER_SETS = {
    (45, 16, 8, 8): {28: "9.87e-02", 25: "2.73e-03", 22: "4.27e-06"},
    (70, 24, 8, 3): {45: "1.68e-03", 42: "4.03e-10"},
    (196, 156, 26, 3): {39: "7.62e-02", 30: "6.56e-19"},
}


def test_failure_prob_reference_values():
    for (n, k, r, rho), table in PAPER_SETS.items():
        for t, expected in table.items():
            assert f"{float(failure_prob_exact(n, k, r, rho, t)):.2e}" == expected


def test_failure_prob_support_edges():
    for (n, k, r, rho) in PAPER_SETS:
        d = n - k + 1 - (math.ceil(k / r) - 1) * (rho - 1)
        assert failure_prob_exact(n, k, r, rho, d - 2) == 0
        assert failure_prob_exact(n, k, r, rho, 0) == 0
        assert failure_prob_exact(n, k, r, rho, n - k) == 1
        assert failure_prob_exact(n, k, r, rho, n) == 1


def test_failure_prob_monotone_in_t():
    n, k, r, rho = 45, 16, 8, 8
    vals = [failure_prob_exact(n, k, r, rho, t) for t in range(0, n + 1)]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


def test_dp_matches_exhaustive_classification():
    shapes = [(12, 4, 2, 2), (12, 6, 2, 2), (10, 4, 2, 4), (14, 6, 3, 5)]
    for (n, k, r, rho) in shapes:
        n_l = r + rho - 1
        rs = [tuple(range(i * n_l, (i + 1) * n_l)) for i in range(n // n_l)]
        for t in range(n + 1):
            bad = sum(
                1
                for e in itertools.combinations(range(n), t)
                if not excess_criterion(rs, n, k, r, e)
            )
            assert failure_prob_exact(n, k, r, rho, t) == Fraction(bad, math.comb(n, t))


def test_memoization_order_independent():
    # querying in different orders returns identical exact values
    args = (45, 16, 8, 8)
    forward = [failure_prob_exact(*args, t) for t in range(20, 30)]
    backward = [failure_prob_exact(*args, t) for t in reversed(range(20, 30))]
    assert forward == list(reversed(backward))


def test_mk_success_prob_endpoint():
    val = mk_success_prob(15, 8, 4, 2, 6, q=2**13, ell=8)
    assert abs(float(val) - 125 / 143) < 1e-6
    # t <= d - 2 with enormous field: success approaches 1
    assert float(mk_success_prob(15, 8, 4, 2, 4, q=2**13, ell=8)) > 0.999
