"""Beyond-Johnson list decoding of GRS-subcode LRCs.

The list decoder decodes every repair set locally, then for each
combination of seemingly correct repair sets shortens the supercode at
those positions and list-decodes the remainder; errors are lifted back
through the shortening map.  A cheap probabilistic variant shortens only
once, at the repair sets with the most trustworthy local results.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .lrc import LrcCode
from .radii import CodeShape, refined_error_count

__all__ = [
    "DecodeConfig",
    "DecodingList",
    "BudgetExceeded",
    "list_decode_lrc",
    "unique_decode_probabilistic",
    "pe_tilde",
    "success_prob_general",
    "success_prob_grs",
    "interleaved_success_prob",
]


@dataclass(frozen=True)
class DecodeConfig:
    """Radii and knobs for the local-global decoders.

    t_l must not exceed the local list decoder's guarantee radius and
    t_g must not exceed the refined global error count for that t_l.
    """

    t_l: int
    t_g: int
    local_decoder: str = "gs"  # "gs" or "bmd"
    budget: int = 10**6  # max shortened decodes before giving up
    early_exit: bool = False  # stop after the first codeword found


@dataclass
class DecodingList:
    codewords: list[tuple[int, ...]] = field(default_factory=list)
    local_list_sizes: list[int] = field(default_factory=list)
    combinations_explored: int = 0
    shortened_decodes: int = 0
    complete: bool = True


class BudgetExceeded(RuntimeError):
    """Search budget exhausted; .partial holds the incomplete list."""

    def __init__(self, partial: DecodingList):
        super().__init__("shortened-decode budget exceeded")
        partial.complete = False
        self.partial = partial


def _shape_of(code: LrcCode) -> CodeShape:
    return CodeShape(code.n, code.k, code.r, code.rho, d=code.d)


def _local_lists(code: LrcCode, received, cfg: DecodeConfig):
    """Per repair set: list of (distance, local codeword), nearest first."""
    out = []
    for j in range(code.mu):
        local = code.local_code(j)
        w = code.restrict(received, j)
        if cfg.local_decoder == "bmd":
            res = local.bmd_decode(w)
            cands = [] if res is None else [res[0]]
        else:
            cands = local.gs_list_decode(w, cfg.t_l)
        entries = []
        for cw in cands:
            dist = sum(1 for a, b in zip(cw, w) if a != b)
            if dist <= cfg.t_l:
                entries.append((dist, cw))
        entries.sort()
        out.append(entries)
    return out


def _validate_cfg(code: LrcCode, cfg: DecodeConfig):
    local_guarantee = code.local_code(0).gs_max_radius()
    if cfg.t_l > local_guarantee:
        raise ValueError(
            f"t_l = {cfg.t_l} exceeds the local guarantee radius {local_guarantee}"
        )
    bar = refined_error_count(_shape_of(code), cfg.t_l, None)
    if cfg.t_g > bar:
        raise ValueError(f"t_g = {cfg.t_g} exceeds the refined error count {bar}")


def _decode_shortened(code: LrcCode, received, cleaned, chosen_sets, chi, cfg, result):
    """Shorten at the chosen repair sets and collect lifted candidates."""
    sup = code.supercode
    subset = tuple(
        sup.locators[i] for j in chosen_sets for i in code.repair_sets[j]
    )
    result.shortened_decodes += 1
    if result.shortened_decodes > cfg.budget:
        raise BudgetExceeded(result)
    short_w, sctx = sup.shorten_received(cleaned, subset)
    radius = min(cfg.t_g - chi, sctx.code.gs_max_radius())
    if radius < 0:
        return []
    found = []
    F = code.field
    for cand in sctx.code.gs_list_decode(short_w, radius):
        short_err = tuple(F.sub(w, c) for w, c in zip(short_w, cand))
        full_err = sctx.lift_error(short_err)
        full_cw = tuple(F.sub(w, e) for w, e in zip(cleaned, full_err))
        dist = sum(1 for a, b in zip(full_cw, received) if a != b)
        if dist <= cfg.t_g and code.is_codeword(full_cw):
            found.append(full_cw)
    return found


def list_decode_lrc(code: LrcCode, received, cfg: DecodeConfig) -> DecodingList:
    """All codewords within distance t_g of the received word.

    Complete whenever the configured radii respect the code's guarantees
    (validated up front).  Raises BudgetExceeded, carrying the partial
    list, if more than cfg.budget shortened decodes would be needed.
    """
    _validate_cfg(code, cfg)
    result = DecodingList()
    lists = _local_lists(code, received, cfg)
    result.local_list_sizes = [len(l) for l in lists]
    s_short = code.mu - cfg.t_g // (cfg.t_l + 1)
    found: set[tuple[int, ...]] = set()

    if s_short <= 0:
        # no repair set is guaranteed decodable; decode globally
        result.combinations_explored = 1
        for cw in _decode_shortened(code, received, tuple(received), (), 0, cfg, result):
            found.add(cw)
        result.codewords = sorted(found)
        return result

    nonempty = [j for j in range(code.mu) if lists[j]]
    nonempty.sort(key=lambda j: (len(lists[j]), j))
    done = False
    for combo in itertools.combinations(nonempty, s_short):
        for picks in itertools.product(*(lists[j] for j in combo)):
            result.combinations_explored += 1
            chi = sum(d for d, _ in picks)
            if chi > cfg.t_g:
                continue
            cleaned = list(received)
            for j, (_, cw) in zip(combo, picks):
                for pos, sym in zip(code.repair_sets[j], cw):
                    cleaned[pos] = sym
            hits = _decode_shortened(
                code, received, tuple(cleaned), combo, chi, cfg, result
            )
            found.update(hits)
            if cfg.early_exit and found:
                done = True
                break
        if done:
            break
    result.codewords = sorted(found)
    if done:
        result.complete = False
    return result


def unique_decode_probabilistic(code: LrcCode, received, cfg: DecodeConfig):
    """Single-shortening unique decoder.

    Shortens at the repair sets with the smallest nonzero local list
    size, taking the nearest entry of each list, and succeeds when the
    shortened decoder returns exactly one consistent codeword.  Returns
    the codeword or None.
    """
    _validate_cfg(code, cfg)
    result = DecodingList()
    lists = _local_lists(code, received, cfg)
    s_short = code.mu - cfg.t_g // (cfg.t_l + 1)
    if s_short <= 0:
        cands = _decode_shortened(code, received, tuple(received), (), 0, cfg, result)
        return cands[0] if len(cands) == 1 else None
    nonempty = [j for j in range(code.mu) if lists[j]]
    if len(nonempty) < s_short:
        return None
    nonempty.sort(key=lambda j: (len(lists[j]), j))
    chosen = tuple(sorted(nonempty[:s_short]))
    picks = [lists[j][0] for j in chosen]
    chi = sum(d for d, _ in picks)
    if chi > cfg.t_g:
        return None
    cleaned = list(received)
    for j, (_, cw) in zip(chosen, picks):
        for pos, sym in zip(code.repair_sets[j], cw):
            cleaned[pos] = sym
    cands = _decode_shortened(code, received, tuple(cleaned), chosen, chi, cfg, result)
    uniq = sorted(set(cands))
    return uniq[0] if len(uniq) == 1 else None


# ---------------------------------------------------------------------------
# success probabilities
# ---------------------------------------------------------------------------

def pe_tilde(n: int, d: int, q: int, t: int) -> Fraction:
    """Miscorrection bound: sum_(s<=t) (q-1)^s C(n,s) / (q-1)^(d-1).

    Bounds the probability that a wrong codeword of an [n, ., d] code
    over GF(q) lands within distance t of the received word, for any
    error weight.  Exact rational; values as small as 10^-50 occur.
    """
    if t > n:
        raise ValueError(f"radius t = {t} exceeds the length n = {n}")
    acc = 0
    pw = 1
    for s in range(t + 1):
        acc += pw * math.comb(n, s)
        pw *= q - 1
    return Fraction(acc, (q - 1) ** (d - 1))


def success_prob_general(
    mu: int, t_g: int, t_l: int, p_e: float, p_local_unique: float, p_global_unique: float
) -> float:
    """Unique-decoding success bound for an arbitrary LRC.

    (1 - p_e)^floor(t_g/(t_l+1)) * p_local_unique^(mu - floor(t_g/(t_l+1)))
    * p_global_unique, where p_e bounds the per-repair-set miscorrection
    probability and the others are single-decoder uniqueness
    probabilities.
    """
    f = t_g // (t_l + 1)
    return (1 - p_e) ** f * p_local_unique ** (mu - f) * p_global_unique


def success_prob_grs(shape: CodeShape, q: int, t_l: int, bar_t_g: int) -> Fraction:
    """Exact-rational success bound for GRS-subcode LRCs.

    (1 - pe(n_l, rho, q, t_l))^mu * (1 - pe(floor(bar_t_g/(t_l+1)) n_l, d, q, bar_t_g)).
    """
    local = 1 - pe_tilde(shape.n_l, shape.rho, q, t_l)
    n_short = (bar_t_g // (t_l + 1)) * shape.n_l
    glob = 1 - pe_tilde(n_short, shape.d, q, bar_t_g)
    return local**shape.mu * glob


def interleaved_success_prob(
    shape: CodeShape,
    ell: int,
    q: int,
    t_l: int,
    t_g: int,
    pr_uds_local: float,
    pr_uds_global: float,
) -> float:
    """Success bound with interleaved component decoders.

    The miscorrection factor is evaluated over the interleaved symbol
    alphabet q^ell; the unique-decoding-success probabilities of the
    component decoders are supplied by the caller.
    """
    f = t_g // (t_l + 1)
    mis = 1 - pe_tilde(shape.n_l, shape.rho, q**ell, t_l)
    return float(mis) ** f * pr_uds_local ** (shape.mu - f) * pr_uds_global
