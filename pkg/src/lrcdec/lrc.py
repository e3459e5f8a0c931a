"""Locally repairable codes as subcodes of GRS codes.

An LrcCode is a GRS supercode together with a partition of the
coordinates into repair sets, a message dimension k, and the monomial
support of its evaluation polynomials.  The constructor builds the
multiplicative-coset family: evaluation points are the order-n subgroup
of GF(q)*, repair sets are cosets of its order-(r + rho - 1) subgroup,
and messages are encoded as f(x) = sum_i f_i(x^(r+rho-1)) x^i.
"""

from __future__ import annotations

import math
from typing import Sequence

from .galois import Field, Poly
from .grs import GrsCode


def optimal_distance(n: int, k: int, r: int, rho: int) -> int:
    """Singleton-like distance bound for an [n, k] code with (r, rho) locality."""
    if r > k or rho < 2:
        raise ValueError("need r <= k and rho >= 2")
    return n - k + 1 - (math.ceil(k / r) - 1) * (rho - 1)


class LrcCode:
    """[n, k, r, rho] locally repairable subcode of a GRS code."""

    def __init__(
        self,
        supercode: GrsCode,
        k: int,
        r: int,
        rho: int,
        repair_sets: Sequence[Sequence[int]],
        degrees: Sequence[int],
        d: int | None = None,
        validate: bool = True,
    ):
        self.supercode = supercode
        self.field = supercode.field
        self.k = k
        self.r = r
        self.rho = rho
        self.repair_sets = tuple(tuple(s) for s in repair_sets)
        self.degrees = tuple(degrees)  # message layout order
        if len(set(self.degrees)) != len(self.degrees):
            raise ValueError("degree support must not repeat")
        self.d = optimal_distance(supercode.n, k, r, rho) if d is None else d

        n = supercode.n
        n_l = r + rho - 1
        if sorted(i for s in self.repair_sets for i in s) != list(range(n)):
            raise ValueError("repair sets must partition the coordinates")
        if any(len(s) != n_l for s in self.repair_sets):
            raise ValueError(f"every repair set must have size {n_l}")
        if len(self.degrees) != k:
            raise ValueError("degree support size must equal k")
        if max(self.degrees) >= supercode.k:
            raise ValueError("degree support exceeds the supercode dimension")
        if validate:
            self._check_local_structure()

    @property
    def n(self) -> int:
        return self.supercode.n

    @property
    def n_l(self) -> int:
        return self.r + self.rho - 1

    @property
    def mu(self) -> int:
        return self.n // self.n_l

    def __repr__(self):
        return (
            f"LrcCode([{self.n},{self.k},{self.r},{self.rho}] over"
            f" GF({self.field.q}), d={self.d})"
        )

    def _check_local_structure(self):
        """Each restriction must be the [n_l, r, rho] GRS code on its locators."""
        for j in range(self.mu):
            local = self.local_code(j)
            seen = set()
            for deg in self.degrees:
                f = Poly(self.field, (0,) * deg + (1,))
                word = self.supercode.encode(f)
                loc = self.restrict(word, j)
                if not local.is_codeword(loc):
                    raise ValueError(f"restriction to repair set {j} leaves the local code")
                seen.add(loc)
            rank = _word_rank(self.field, seen)
            if rank != self.r:
                raise ValueError(
                    f"local code {j} has dimension {rank}, expected {self.r}"
                )

    # -- encoding ----------------------------------------------------------------

    def message_poly(self, message: Sequence[int]) -> Poly:
        if len(message) != self.k:
            raise ValueError(f"message must have {self.k} symbols")
        coeffs = [0] * (max(self.degrees) + 1)
        for sym, deg in zip(message, self.degrees):
            coeffs[deg] = sym
        return Poly(self.field, coeffs)

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        return self.supercode.encode(self.message_poly(message))

    def is_codeword(self, word) -> bool:
        if len(word) != self.n:
            return False
        f = self.supercode.interpolate_word(word)
        allowed = set(self.degrees)
        return all(c == 0 or i in allowed for i, c in enumerate(f.coeffs))

    # -- locality ----------------------------------------------------------------

    def local_code(self, j: int) -> GrsCode:
        idx = self.repair_sets[j]
        return GrsCode(
            self.field,
            [self.supercode.locators[i] for i in idx],
            [self.supercode.multipliers[i] for i in idx],
            self.r,
        )

    def restrict(self, word, j: int) -> tuple[int, ...]:
        return tuple(word[i] for i in self.repair_sets[j])

    # -- serialization -------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "locators": list(self.supercode.locators),
            "multipliers": list(self.supercode.multipliers),
            "supercode_k": self.supercode.k,
            "k": self.k,
            "r": self.r,
            "rho": self.rho,
            "repair_sets": [list(s) for s in self.repair_sets],
            "degrees": list(self.degrees),
            "d": self.d,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "LrcCode":
        field = Field.from_json(obj["field"])
        sup = GrsCode(field, obj["locators"], obj["multipliers"], obj["supercode_k"])
        return cls(
            sup,
            obj["k"],
            obj["r"],
            obj["rho"],
            obj["repair_sets"],
            obj["degrees"],
            d=obj.get("d"),
        )


def _word_rank(field: Field, words) -> int:
    from . import linalg

    rows = [list(w) for w in words]
    if not rows:
        return 0
    return linalg.rank(linalg.as_matrix(rows), field)


def construct_tamo_barg(field: Field, n: int, k: int, r: int, rho: int) -> LrcCode:
    """Distance-optimal LRC on multiplicative cosets.

    Requires (r + rho - 1) | n, r | k, and n | q - 1.  Messages are laid
    out row-major: symbol (i, j) is coefficient j of f_i, i.e. the
    coefficient of x^(i + j(r + rho - 1)).
    """
    n_l = r + rho - 1
    if n % n_l != 0:
        raise ValueError(f"repair set size {n_l} must divide n = {n}")
    if k % r != 0:
        raise ValueError(f"locality r = {r} must divide k = {k}")
    if (field.q - 1) % n != 0:
        raise ValueError(f"n = {n} must divide q - 1 = {field.q - 1}")
    if rho < 2 or r < 1 or k < r:
        raise ValueError("need rho >= 2 and 1 <= r <= k")

    mu = n // n_l
    g = field.generator()
    gn = field.pow(g, (field.q - 1) // n)  # order n
    h = field.pow(gn, mu)  # order n_l
    locators = []
    for j in range(mu):
        rep = field.pow(gn, j)
        beta = rep
        for _ in range(n_l):
            locators.append(beta)
            beta = field.mul(beta, h)
    repair_sets = [list(range(j * n_l, (j + 1) * n_l)) for j in range(mu)]
    degrees = [i + j * n_l for i in range(r) for j in range(k // r)]
    k_sup = max(degrees) + 1
    supercode = GrsCode(field, locators, [1] * n, k_sup)
    return LrcCode(supercode, k, r, rho, repair_sets, degrees)
