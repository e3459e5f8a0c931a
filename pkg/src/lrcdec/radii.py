"""Decoding radii, list-size bounds, and gain criteria for LRCs.

Radii follow the convention t = ceil(tau - 1) for the number of
correctable errors at real radius tau.  ``q=None`` selects the
alphabet-independent case (theta = 1); a finite q uses
theta = 1 - 1/q.  Integer thresholds are validated with exact rational
arithmetic so float noise cannot shift a boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from fractions import Fraction
from typing import NamedTuple, Sequence

from .lrc import optimal_distance

__all__ = [
    "CodeShape",
    "RadiusReport",
    "johnson",
    "johnson_radius",
    "johnson_errors",
    "johnson_list_bound",
    "correctable_from_radius",
    "sigma",
    "ceil_sigma",
    "sigma_exact",
    "lrc_list_radius",
    "refined_error_count",
    "list_size_bounds",
    "gain_criteria",
    "normalized_radius",
    "irs_radius",
    "interleaved_lrc_radius",
    "interleaved_radius_l2",
    "interleaved_error_count",
    "h_decreasing",
    "generalized_weight",
    "erasure_list_size",
    "compute_report",
]


def _theta(q) -> Fraction:
    if q is None or q == math.inf:
        return Fraction(1)
    if q < 2:
        raise ValueError("field size must be at least 2")
    return Fraction(q - 1, q)


@dataclass(frozen=True)
class CodeShape:
    """Parameter tuple of an LRC; no concrete code is required."""

    n: int
    k: int
    r: int
    rho: int
    q: int | None = None  # None = alphabet-independent
    d: int | None = None  # defaults to the optimal LRC distance

    def __post_init__(self):
        if self.n % self.n_l != 0:
            raise ValueError(f"repair set size {self.n_l} must divide n = {self.n}")
        if self.d is None:
            object.__setattr__(self, "d", optimal_distance(self.n, self.k, self.r, self.rho))

    @property
    def n_l(self) -> int:
        return self.r + self.rho - 1

    @property
    def mu(self) -> int:
        return self.n // self.n_l

    @property
    def theta(self) -> Fraction:
        return _theta(self.q)


def correctable_from_radius(tau: float) -> int:
    """Number of correctable errors t = ceil(tau - 1), snapping float noise."""
    near = round(tau)
    if abs(tau - near) < 1e-9:
        return near - 1
    return math.ceil(tau - 1)


# ---------------------------------------------------------------------------
# Johnson radius
# ---------------------------------------------------------------------------

def johnson_radius(n: int, d: int, q=None) -> float:
    """theta*n*(1 - sqrt(1 - d/(n*theta))); requires d <= n*theta."""
    th = _theta(q)
    if d < 0:
        raise ValueError("distance must be nonnegative")
    if Fraction(d) > n * th:
        raise ValueError(f"d = {d} exceeds n*theta = {float(n * th):g}")
    thf = float(th)
    return thf * n * (1.0 - math.sqrt(1.0 - d / (n * thf)))


def johnson_errors(n: int, d: int, q=None) -> int:
    """Largest integer t strictly below the Johnson radius (exact check)."""
    th = _theta(q)
    if Fraction(d) > n * th:
        raise ValueError(f"d = {d} exceeds n*theta = {float(n * th):g}")
    tau = johnson_radius(n, d, q)
    t = math.ceil(tau) + 1
    # t < tau  <=>  theta*n - t > 0 and (theta*n - t)^2 > theta*n*(theta*n - d)
    while t >= 0:
        lhs = n * th - t
        if lhs > 0 and lhs * lhs > n * th * (n * th - d):
            return t
        t -= 1
    return -1


def johnson_list_bound(n: int, d: int, q, t: int) -> Fraction | None:
    """List-size bound theta*d*n / (t^2 - theta*n*(2t - d)) at integer radius t.

    Returns None when the denominator is not strictly positive (the bound
    carries no information at or beyond the Johnson radius).
    """
    th = _theta(q)
    denom = Fraction(t * t) - th * n * (2 * t - d)
    if denom <= 0:
        return None
    return th * d * n / denom


class JohnsonResult(NamedTuple):
    tau: float
    t: int
    list_bound: int | None


def johnson(n: int, d: int, q=None) -> JohnsonResult:
    """Radius, correctable errors, and list bound evaluated at t."""
    tau = johnson_radius(n, d, q)
    if d == 0:
        return JohnsonResult(0.0, -1, None)
    t = johnson_errors(n, d, q)
    lb = johnson_list_bound(n, d, q, t)
    return JohnsonResult(tau, t, None if lb is None else math.floor(lb))


# ---------------------------------------------------------------------------
# LRC radii
# ---------------------------------------------------------------------------

def sigma(mu: int, tau_g: float, tau_l: float) -> float:
    """Guaranteed number of repair sets with at most t_l errors."""
    if tau_l <= 0:
        raise ValueError("local radius must be positive")
    return max(0.0, mu - tau_g / tau_l)


def ceil_sigma(mu: int, tau_g: float, tau_l: float) -> int:
    s = sigma(mu, tau_g, tau_l)
    near = round(s)
    if abs(s - near) < 1e-9:
        return near
    return math.ceil(s)


def sigma_exact(shape: CodeShape) -> Fraction:
    """sigma at the operating point, where tau_g / tau_l = d / rho exactly."""
    return max(Fraction(0), Fraction(shape.mu) - Fraction(shape.d, shape.rho))


def lrc_list_radius(shape: CodeShape, q=None) -> float:
    """Global list-decoding radius exploiting locality.

    (d / rho) times the local Johnson radius whenever that guarantees at
    least one locally decodable repair set; the plain Johnson radius of
    the code otherwise.
    """
    if math.ceil(sigma_exact(shape)) > 0:
        tau_jl = johnson_radius(shape.n_l, shape.rho, q)
        return shape.d / shape.rho * tau_jl
    return johnson_radius(shape.n, shape.d, q)


def refined_error_count(shape: CodeShape, t_l: int, q=None) -> int:
    """Largest t with t^2 + theta * floor(t/(t_l+1)) * n_l * (d - 2t) > 0.

    Scans upward from the closed-form error count and returns the last
    success before the first failure, capped at n.
    """
    th = _theta(q)
    n_l, d = shape.n_l, shape.d

    def holds(t: int) -> bool:
        return Fraction(t * t) + th * (t // (t_l + 1)) * n_l * (d - 2 * t) > 0

    t = max(correctable_from_radius(lrc_list_radius(shape, q)), 1)
    if not holds(t):
        return t
    while t + 1 <= shape.n and holds(t + 1):
        t += 1
    return t


def gain_criteria(shape: CodeShape, tau_l: float | None = None, q=None) -> tuple[bool, bool]:
    """(radius exceeds Johnson, local radius large enough to help).

    The first test is mu * rho > d; the second compares the normalized
    local decoding radius against the normalized global Johnson radius.
    """
    exceeds = shape.mu * shape.rho > shape.d
    if tau_l is None:
        tau_l = johnson_radius(shape.n_l, shape.rho, q)
    th = float(_theta(q))
    lemma = tau_l / shape.n_l > th * (1.0 - math.sqrt(1.0 - shape.d / (shape.n * th)))
    return exceeds, lemma


def normalized_radius(beta: float, delta: float, q=None) -> float:
    """Normalized radius (1/beta)*theta*(1 - sqrt(1 - beta*delta/theta)).

    beta is the ratio of normalized local to global distance; delta = d/n.
    Valid while beta * delta <= theta (up to the Singleton crossing).
    """
    th = float(_theta(q))
    if beta < 1:
        raise ValueError("beta must be at least 1")
    x = beta * delta / th
    if x > 1 + 1e-12:
        raise ValueError(f"beta*delta/theta = {x:g} is past the domain boundary 1")
    x = min(x, 1.0)
    return th / beta * (1.0 - math.sqrt(1.0 - x))


# ---------------------------------------------------------------------------
# list-size bounds
# ---------------------------------------------------------------------------

def list_size_bounds(
    shape: CodeShape, t_l: int | None = None, q=None
) -> tuple[int | None, int | None]:
    """Worst-case list bounds (basic, first-order improved).

    Basic: C(mu, ceil(sigma)) * L_local^ceil(sigma) * L_global(tau_g).
    Improved: the global factor may be evaluated at radius
    tau_g - xi*(rho - tau_Jl) for the worst xi <= ceil(sigma), which is
    never larger.  Returns None where a component bound is unbounded.
    """
    scl = math.ceil(sigma_exact(shape))
    tau_jl = johnson_radius(shape.n_l, shape.rho, q)
    if t_l is None:
        t_l = johnson_errors(shape.n_l, shape.rho, q)
    if scl == 0:
        t_j = johnson_errors(shape.n, shape.d, q)
        lb = johnson_list_bound(shape.n, shape.d, q, t_j)
        v = None if lb is None else math.floor(lb)
        return v, v
    tau_g = lrc_list_radius(shape, q)
    n_short = shape.n - scl * shape.n_l
    l_loc = johnson_list_bound(shape.n_l, shape.rho, q, t_l)
    if l_loc is None:
        return None, None

    def global_bound(tau: float) -> Fraction | None:
        t = correctable_from_radius(tau)
        if t < 0:
            return Fraction(0)
        if n_short <= shape.d:
            return Fraction(1)
        return johnson_list_bound(n_short, shape.d, q, t)

    l_glob = global_bound(tau_g)
    if l_glob is None:
        return None, None
    choose = math.comb(shape.mu, scl)
    basic = choose * l_loc**scl * l_glob
    best = Fraction(0)
    for xi in range(scl + 1):
        g = global_bound(tau_g - xi * (shape.rho - tau_jl))
        if g is None:
            return math.floor(basic), None
        cand = l_loc**xi * g
        if cand > best:
            best = cand
    improved = choose * best
    return math.floor(basic), math.floor(improved)


# ---------------------------------------------------------------------------
# interleaved radii
# ---------------------------------------------------------------------------

def irs_radius(n: int, d: int, ell: int) -> float:
    """Maximal burst radius of interleaved RS decoders, n(1 - ((n-d)/n)^(ell/(ell+1)))."""
    if ell < 1:
        raise ValueError("interleaving degree must be at least 1")
    return n * (1.0 - ((n - d) / n) ** (ell / (ell + 1.0)))


def interleaved_lrc_radius(shape: CodeShape, ell: int) -> float:
    """Radius of the local-global strategy with interleaved component decoders.

    Equals (d / rho) times the local interleaved radius when locality
    helps (mu * rho > d), i.e. the real solution of the shortened-length
    fixed point; the plain interleaved radius of the code otherwise.
    """
    if shape.mu * shape.rho > shape.d:
        return shape.d / shape.rho * irs_radius(shape.n_l, shape.rho, ell)
    return irs_radius(shape.n, shape.d, ell)


def interleaved_radius_l2(shape: CodeShape) -> float:
    """Closed form at interleaving degree 2:

    d * (2 - rho/n_l) / ((1 - rho/n_l)^(4/3) + (1 - rho/n_l)^(2/3) + 1).
    """
    z = 1.0 - shape.rho / shape.n_l
    return shape.d * (2.0 - shape.rho / shape.n_l) / (z ** (4 / 3) + z ** (2 / 3) + 1.0)


def interleaved_error_count(shape: CodeShape, ell: int) -> int:
    """Largest t with (N - t)^(ell+1) > N (N - d)^ell, N = n - ceil(sigma)*n_l.

    Exact integer arithmetic; ceil(sigma) comes from the rational
    operating point sigma = mu - d/rho.
    """
    scl = math.ceil(sigma_exact(shape))
    nn = shape.n - scl * shape.n_l
    d = shape.d
    if nn <= 0:
        return 0
    if nn <= d:
        return nn - 1
    t = 0
    while t + 1 < nn and (nn - (t + 1)) ** (ell + 1) > nn * (nn - d) ** ell:
        t += 1
    return t


def h_decreasing(d: int, ell: int, q, n_values: Sequence[int], tol: float = 1e-12) -> bool:
    """Check that theta*n*(1 - (1 - d/(n theta))^(ell/(ell+1))) never increases.

    All n in n_values must satisfy n >= d / theta.
    """
    th = float(_theta(q))
    ns = sorted(n_values)
    if ns and ns[0] < d / th:
        raise ValueError(f"grid starts below d/theta = {d / th:g}")

    def h(n):
        return th * n * (1.0 - (1.0 - d / (n * th)) ** (ell / (ell + 1.0)))

    vals = [h(n) for n in ns]
    return all(b <= a + tol for a, b in zip(vals, vals[1:]))


# ---------------------------------------------------------------------------
# erasure list decoding
# ---------------------------------------------------------------------------

def generalized_weight(n: int, k: int, r: int, i: int) -> int:
    """i-th generalized Hamming weight bound of an (r, 2)-locality code.

    Attained with equality by distance-optimal codes.
    """
    if not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= k, got i = {i}")
    return n - k - math.ceil((k - i + 1) / r) + i + 1


def erasure_list_size(n: int, k: int, r: int, q: int, t: int) -> int:
    """Smallest worst-case list size when recovering t erasures.

    q^j for the least j with d_(j+1) > t; requires t < n.
    """
    if not 0 <= t < n:
        raise ValueError("erasure count must be in [0, n)")
    for j in range(k):
        if generalized_weight(n, k, r, j + 1) > t:
            return q**j
    raise RuntimeError("unreachable: d_k = n > t")


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

@dataclass
class RadiusReport:
    """All radii of one parameter set, alphabet-independent convention."""

    n: int
    k: int
    r: int
    rho: int
    q: int | None
    n_l: int
    d: int
    tau_j_local: float
    t_local: int
    tau_j: float
    t_j: int
    sigma: float
    ceil_sigma: int
    tau_g: float
    t_g: int
    refined_t_g: int
    johnson_list_bound: int | None
    lrc_list_bound: int | None
    lrc_list_bound_improved: int | None
    tau_irs_l2: float
    tau_g_interleaved_l2: float
    gain_over_johnson: bool
    local_radius_gain: bool
    # same radii with theta = 1 - 1/q, when q is finite
    tau_j_local_q: float | None = None
    tau_j_q: float | None = None
    tau_g_q: float | None = None

    def as_dict(self) -> dict:
        out = asdict(self)
        out["exact"] = {
            "t_local": str(self.t_local),
            "t_j": str(self.t_j),
            "t_g": str(self.t_g),
            "refined_t_g": str(self.refined_t_g),
            "johnson_list_bound": str(self.johnson_list_bound),
            "lrc_list_bound": str(self.lrc_list_bound),
            "lrc_list_bound_improved": str(self.lrc_list_bound_improved),
        }
        return out


def compute_report(shape: CodeShape) -> RadiusReport:
    """Radii in the alphabet-independent convention used for comparison
    tables, with the theta_q variants attached when q is finite."""
    tau_jl = johnson_radius(shape.n_l, shape.rho, None)
    t_l = johnson_errors(shape.n_l, shape.rho, None)
    tau_j = johnson_radius(shape.n, shape.d, None)
    t_j = johnson_errors(shape.n, shape.d, None)
    tau_g = lrc_list_radius(shape, None)
    sig = float(sigma_exact(shape))
    t_g = correctable_from_radius(tau_g)
    bar_t = refined_error_count(shape, t_l, None)
    jb = johnson_list_bound(shape.n, shape.d, None, t_j)
    basic, improved = list_size_bounds(shape, t_l, None)
    c1, c2 = gain_criteria(shape, tau_jl, None)
    rep = RadiusReport(
        n=shape.n,
        k=shape.k,
        r=shape.r,
        rho=shape.rho,
        q=shape.q,
        n_l=shape.n_l,
        d=shape.d,
        tau_j_local=tau_jl,
        t_local=t_l,
        tau_j=tau_j,
        t_j=t_j,
        sigma=sig,
        ceil_sigma=math.ceil(sigma_exact(shape)),
        tau_g=tau_g,
        t_g=t_g,
        refined_t_g=bar_t,
        johnson_list_bound=None if jb is None else math.floor(jb),
        lrc_list_bound=basic,
        lrc_list_bound_improved=improved,
        tau_irs_l2=irs_radius(shape.n, shape.d, 2),
        tau_g_interleaved_l2=interleaved_radius_l2(shape),
        gain_over_johnson=c1,
        local_radius_gain=c2,
    )
    if shape.q is not None:
        rep.tau_j_local_q = johnson_radius(shape.n_l, shape.rho, shape.q)
        rep.tau_j_q = johnson_radius(shape.n, shape.d, shape.q)
        rep.tau_g_q = lrc_list_radius(shape, shape.q)
    return rep
