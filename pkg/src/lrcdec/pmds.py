"""Partial MDS (maximally recoverable) codes and decoding-failure analysis.

Covers exhaustive verification of the PMDS property, randomized
construction over large fields, counting of index sets compatible with
the locality structure, and the exact probability that a random error
support defeats the interleaved support-locating decoder, computed by a
memoized dynamic program with big-integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .galois import Field
from .grs import GrsCode
from .lrc import optimal_distance


@dataclass
class PmdsCode:
    """Generator/parity pair with a repair-set partition; locals are MDS."""

    field: Field
    generator: np.ndarray
    parity: np.ndarray
    repair_sets: tuple[tuple[int, ...], ...]
    n: int
    k: int
    r: int
    rho: int
    verified: bool = False

    @property
    def n_l(self) -> int:
        return self.r + self.rho - 1

    @property
    def mu(self) -> int:
        return self.n // self.n_l

    @property
    def d(self) -> int:
        return optimal_distance(self.n, self.k, self.r, self.rho)

    def encode(self, message: Sequence[int]) -> np.ndarray:
        msg = np.asarray([message], dtype=np.int64)
        return linalg.matmul(msg, self.generator, self.field)[0]


def _is_mds(field: Field, basis: np.ndarray, k: int, budget: list[int]) -> bool:
    """Every k columns of the k x n basis must be linearly independent."""
    n = basis.shape[1]
    for cols in itertools.combinations(range(n), k):
        budget[0] -= 1
        if budget[0] < 0:
            raise RuntimeError("exhaustive PMDS check exceeds the rank-test budget")
        if linalg.rank(basis[:, list(cols)], field) != k:
            return False
    return True


def verify_pmds(
    field: Field,
    generator: np.ndarray,
    repair_sets: Sequence[Sequence[int]],
    r: int,
    rho: int,
    budget: int = 2_000_000,
) -> bool:
    """Exhaustive check of the maximal-recoverability property.

    Every local restriction must be an [r+rho-1, r, rho] MDS code, and
    every puncturing of rho-1 positions per repair set must leave an MDS
    code of the full dimension.  Raises RuntimeError when the number of
    rank tests would exceed the budget.
    """
    g = np.asarray(generator, dtype=np.int64)
    k, n = g.shape
    n_l = r + rho - 1
    remaining = [budget]
    for rs in repair_sets:
        local = g[:, list(rs)]
        red, rank, _ = linalg.rref(local, field)
        if rank != r:
            return False
        basis = red[:r, :]
        if not _is_mds(field, basis, r, remaining):
            return False
    patterns = itertools.product(
        *[itertools.combinations(rs, rho - 1) for rs in repair_sets]
    )
    for pat in patterns:
        removed = set(itertools.chain.from_iterable(pat))
        kept = [j for j in range(n) if j not in removed]
        punctured = g[:, kept]
        if linalg.rank(punctured, field) != k:
            return False
        if not _is_mds(field, punctured, k, remaining):
            return False
    return True


def random_pmds(
    q: int, n: int, k: int, r: int, rho: int, seed: int, max_tries: int = 50
) -> PmdsCode:
    """Random PMDS code: fixed GRS local codes, random global combination.

    Draws the k x (mu*r) mixing matrix uniformly until the exhaustive
    verification passes.  Deterministic in the seed.  Raises ValueError
    when max_tries is exhausted (try a larger field).
    """
    field = Field(q)
    n_l = r + rho - 1
    if n % n_l != 0:
        raise ValueError(f"repair set size {n_l} must divide n = {n}")
    mu = n // n_l
    if k > mu * r:
        raise ValueError("dimension cannot exceed mu * r")
    if n_l > q:
        raise ValueError(f"field with q = {q} is too small for local length {n_l}")
    local = GrsCode(field, list(range(n_l)), [1] * n_l, r)
    g_loc = local.generator_matrix()
    block = np.zeros((mu * r, n), dtype=np.int64)
    for i in range(mu):
        block[i * r : (i + 1) * r, i * n_l : (i + 1) * n_l] = g_loc
    repair_sets = tuple(
        tuple(range(i * n_l, (i + 1) * n_l)) for i in range(mu)
    )
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        mix = rng.integers(0, q, size=(k, mu * r), dtype=np.int64)
        gen = linalg.matmul(mix, block, field)
        if linalg.rank(gen, field) != k:
            continue
        if verify_pmds(field, gen, repair_sets, r, rho):
            parity = linalg.right_nullspace(gen, field)
            return PmdsCode(
                field, gen, parity, repair_sets, n, k, r, rho, verified=True
            )
    raise ValueError(
        f"no PMDS instance found in {max_tries} tries; use a larger field than {q}"
    )


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

def s_mu_size(n: int, k: int, r: int, rho: int, size: int) -> int:
    """Number of cardinality-`size` subsets meeting every repair set in <= r
    positions, via a per-repair-set convolution."""
    n_l = r + rho - 1
    if n % n_l != 0:
        raise ValueError("repair set size must divide n")
    mu = n // n_l
    per_set = [math.comb(n_l, j) for j in range(min(r, n_l) + 1)]
    acc = [1]
    for _ in range(mu):
        new = [0] * (len(acc) + len(per_set) - 1)
        for i, a in enumerate(acc):
            if a:
                for j, b in enumerate(per_set):
                    new[i + j] += a * b
        acc = new
    return acc[size] if size < len(acc) else 0


def complement_count_closed_form(n: int, k: int, r: int) -> int:
    """Alternating sum counting the (k+1)-subsets that swallow a whole
    repair set, for local distance 2 (repair sets of size r+1)."""
    total = 0
    for j in range(1, (k + 1) // (r + 1) + 1):
        term = math.comb(n // (r + 1), j) * math.comb(n - j * (r + 1), k + 1 - j * (r + 1))
        total += term if j % 2 == 1 else -term
    return total


def rank_full_fraction(q: int, ell: int, t: int) -> Fraction:
    """Fraction of ell x t matrices over GF(q) with full column rank t."""
    if t > ell:
        return Fraction(0)
    num = 1
    for j in range(t):
        num *= q**ell - q**j
    return Fraction(num, q ** (t * ell))


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def sk1_bound(n: int, k: int, r: int, rho: int) -> float:
    """Closed-form lower bound on the good-set fraction |S_(k+1)| / C(n, k+1):

    1 - n * C(r+rho-1, xi) * ((k+1)/n)^(r+1), xi = min(rho-2, floor((r+rho-1)/2)).
    """
    xi = min(rho - 2, (r + rho - 1) // 2)
    val = 1 - Fraction(n) * math.comb(r + rho - 1, xi) * Fraction(k + 1, n) ** (r + 1)
    return float(val)


def union_bound_failure(n: int, k: int, r: int, rho: int) -> Fraction:
    """Union bound on the failure fraction at weight n-k-1: the relative
    number of (k+1)-sets overloading at least one repair set."""
    n_l = r + rho - 1
    mu = n // n_l
    bad = 0
    for j in range(r + 1, n_l + 1):
        bad += math.comb(n_l, j) * math.comb(n - n_l, k + 1 - j)
    return Fraction(mu * bad, math.comb(n, k + 1))


def asymptotic_predicates(
    n: int, k: int, r: int, rho: int, c1: float, c2: float
) -> tuple[bool, bool]:
    """The two conditions under which the good-set fraction tends to 1:

    a rate condition C(r+rho-1, xi)^(-1/(r+1)) > c1 (k+1)/n and a growth
    condition r+1 >= c2 log2(n) / log2(c1).
    """
    if c1 <= 1 or c2 <= 1:
        raise ValueError("constants must exceed 1")
    xi = min(rho - 2, (r + rho - 1) // 2)
    cond_rate = math.comb(r + rho - 1, xi) ** (-1.0 / (r + 1)) > c1 * (k + 1) / n
    cond_growth = r + 1 >= c2 * math.log2(n) / math.log2(c1)
    return cond_rate, cond_growth


# ---------------------------------------------------------------------------
# exact failure probability
# ---------------------------------------------------------------------------

def failure_prob_exact(n: int, k: int, r: int, rho: int, t: int) -> Fraction:
    """Probability that a uniform weight-t support defeats the decoder.

    Counts, over all distributions of the n-t error-free positions to
    the repair sets, those whose overall excess is too large, weighting
    each distribution by its number of supports.  Memoized top-down
    recursion over (sets left, positions left, accumulated excess,
    whether some set kept 1..r positions); exact big-integer arithmetic.
    """
    if not 0 <= t <= n:
        raise ValueError("error weight must be in [0, n]")
    n_l = r + rho - 1
    if n % n_l != 0:
        raise ValueError("repair set size must divide n")
    mu = n // n_l
    binom = [math.comb(n_l, j) for j in range(n_l + 1)]
    memo: dict[tuple[int, int, int, int], int] = {}

    def w(eta: int, tau: int, sig: int, beta: int) -> int:
        key = (eta, tau, sig, beta)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if eta == 1:
            beta_next = 1 if (beta == 1 or 0 < tau <= r) else 0
            if tau <= n_l and sig + max(0, tau - r) > n - k - t - beta_next:
                res = binom[tau]
            else:
                res = 0
        else:
            res = 0
            for w1 in range(min(tau, n_l) + 1):
                beta_next = 1 if (beta == 1 or 0 < w1 <= r) else 0
                res += binom[w1] * w(eta - 1, tau - w1, sig + max(0, w1 - r), beta_next)
        memo[key] = res
        return res

    return Fraction(w(mu, n - t, 0, 0), math.comb(n, t))


def mk_success_prob(n: int, k: int, r: int, rho: int, t: int, q: int, ell: int) -> Fraction:
    """Success probability of the support-locating decoder on a uniform
    weight-t burst with uniform values: (good supports) x (full rank)."""
    return (1 - failure_prob_exact(n, k, r, rho, t)) * rank_full_fraction(q, ell, t)
