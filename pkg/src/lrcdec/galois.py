"""Finite-field arithmetic GF(p^m) and univariate polynomials.

Field elements are plain Python ints in ``[0, q)``.  For extension fields
the integer encodes the coefficient vector of the element in base ``p``
(lowest degree digit first), so for ``p = 2`` this is the usual bit
encoding.  Multiplication uses log/antilog tables for characteristic 2
and plain modular arithmetic for prime fields; odd-characteristic
extension fields fall back to naive polynomial arithmetic.

Fields are immutable after construction and safe to share across
threads; all operations are pure.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Sequence

NEG_INF = float("-inf")  # degree of the zero polynomial

_MAX_ORDER = 1 << 20


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for f in range(2, math.isqrt(n) + 1):
        if n % f == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# GF(p)[x] helpers on digit tuples (lowest degree first), used only for
# modulus search and odd-characteristic extension arithmetic.
# ---------------------------------------------------------------------------

def _int_to_digits(v: int, p: int) -> tuple[int, ...]:
    digits = []
    while v:
        digits.append(v % p)
        v //= p
    return tuple(digits)


def _digits_to_int(digits: Sequence[int], p: int) -> int:
    v = 0
    for d in reversed(digits):
        v = v * p + d
    return v


def _poly_trim(a: Sequence[int]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return tuple(a[:i])


def _poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return _poly_modp(res, mod, p)


def _poly_modp(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = (c * inv_lead) % p
            for j, mj in enumerate(mod):
                a[i - dm + j] = (a[i - dm + j] - f * mj) % p
    return _poly_trim(a)


def _poly_powmod(a, e, mod, p):
    result = (1,)
    base = _poly_modp(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        # a mod b
        a = list(a)
        db = len(b) - 1
        inv_lead = pow(b[-1], p - 2, p)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c:
                f = (c * inv_lead) % p
                for j, bj in enumerate(b):
                    a[i - db + j] = (a[i - db + j] - f * bj) % p
        a, b = b, _poly_trim(a)
    return a


def _is_irreducible(digits: tuple[int, ...], p: int) -> bool:
    """Rabin test: x^(p^m) == x mod f, and gcd(x^(p^(m/s)) - x, f) = 1."""
    m = len(digits) - 1
    if m < 1:
        return False
    x = (0, 1)
    xq = _poly_powmod(x, p ** m, digits, p)
    # x^(p^m) - x must be 0 mod f
    diff = list(xq) + [0] * max(0, 2 - len(xq))
    diff[1] = (diff[1] - 1) % p
    if _poly_trim(diff):
        return False
    for s in _prime_factors(m):
        xe = _poly_powmod(x, p ** (m // s), digits, p)
        diff = list(xe) + [0] * max(0, 2 - len(xe))
        diff[1] = (diff[1] - 1) % p
        g = _poly_gcd(diff, digits, p)
        if len(g) - 1 != 0:
            return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, m: int) -> int:
    """Smallest monic irreducible of degree m over GF(p), digit-encoded.

    "Smallest" orders polynomials by their base-p integer encoding, which
    makes the default reproducible across implementations.
    """
    if m == 1:
        return p  # the polynomial x .. any monic degree-1 works; x itself
    start = p ** m
    for v in range(start, 2 * start):
        digits = _int_to_digits(v, p)
        if digits[-1] != 1:
            continue
        if _is_irreducible(digits, p):
            return v
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")


class Field:
    """The finite field GF(p^m) with q = p^m <= 2^20 elements.

    Parameters
    ----------
    q : int
        Field order, a prime power.
    modulus : int, optional
        Digit-encoded (base p) monic irreducible of degree m.  Defaults
        to the smallest such polynomial.
    """

    def __init__(self, q: int, modulus: int | None = None):
        if q < 2 or q > _MAX_ORDER:
            raise ValueError(f"field order must be in [2, 2^20], got {q}")
        p, m = _factor_prime_power(q)
        self.p = p
        self.m = m
        self.q = q
        if modulus is None:
            modulus = default_modulus(p, m)
        if m > 1:
            digits = _int_to_digits(modulus, p)
            if len(digits) - 1 != m or digits[-1] != 1:
                raise ValueError("modulus must be monic of degree m")
            if not _is_irreducible(digits, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
            self._mod_digits = digits
        else:
            self._mod_digits = (0, 1)
        self.modulus = modulus

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if p == 2:
            self._build_tables()

    # -- construction helpers ---------------------------------------------

    def _build_tables(self):
        q = self.q
        g = self.generator()
        exp = [1] * (2 * (q - 1) if q > 2 else 2)
        log = [0] * q
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = self._mul_raw(v, g)
        for i in range(q - 1, len(exp)):
            exp[i] = exp[i - (q - 1)]
        self._exp = exp
        self._log = log

    def generator(self) -> int:
        """Smallest generator of the multiplicative group."""
        order = self.q - 1
        if order == 1:
            return 1
        factors = _prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_raw(g, order // f) != 1 for f in factors):
                return g
        raise RuntimeError("no generator found")  # unreachable for a field

    # -- raw arithmetic (no tables) ----------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a * b) % p
        if p == 2:
            mod = self.modulus
            top = 1 << self.m
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        da = _int_to_digits(a, p)
        db = _int_to_digits(b, p)
        return _digits_to_int(_poly_mulmod(da, db, self._mod_digits, p), p)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    # -- public scalar operations -------------------------------------------

    @property
    def theta(self) -> float:
        """1 - 1/q, the alphabet factor in list-decoding radii."""
        return 1.0 - 1.0 / self.q

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        p = self.p
        da, db = _int_to_digits(a, p), _int_to_digits(b, p)
        if len(da) < len(db):
            da, db = db, da
        out = list(da)
        for i, d in enumerate(db):
            out[i] = (out[i] + d) % p
        return _digits_to_int(out, p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return _digits_to_int([(-d) % p for d in _int_to_digits(a, p)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]]
        return self._pow_raw(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        return self._pow_raw(a, e)

    def elements(self) -> range:
        return range(self.q)

    def nonzero_elements(self) -> range:
        return range(1, self.q)

    def embed_int(self, n: int) -> int:
        """Image of the integer n under Z -> GF(p) < GF(p^m)."""
        return n % self.p

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "modulus": self.modulus}

    @classmethod
    def from_json(cls, obj: dict) -> "Field":
        return cls(obj["p"] ** obj["m"], modulus=obj["modulus"])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Field)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"Field(GF({self.p}))"
        return f"Field(GF({self.p}^{self.m}), modulus={self.modulus})"


@lru_cache(maxsize=None)
def _factor_prime_power(q: int) -> tuple[int, int]:
    for p in range(2, math.isqrt(q) + 1):
        if q % p == 0:
            m = 0
            v = q
            while v % p == 0:
                v //= p
                m += 1
            if v != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, m
    if not _is_prime(q):
        raise ValueError(f"{q} is not a prime power")
    return q, 1


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Univariate polynomial over a Field, coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -inf.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        self.field = field
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls(field, (0, 1))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.q, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = F.add(out[i], v)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(F)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Quotient and remainder; deg(remainder) < deg(divisor)."""
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                f = F.mul(c, inv_lead)
                quot[i - d] = f
                for j, oj in enumerate(other.coeffs):
                    rem[i - d + j] = F.sub(rem[i - d + j], F.mul(f, oj))
        return Poly(F, quot), Poly(F, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.scale(self.field.inv(a.coeffs[-1]))

    def derivative(self) -> "Poly":
        F = self.field
        out = []
        for i in range(1, len(self.coeffs)):
            ci = self.coeffs[i]
            # formal derivative: coefficient i * c_i with i reduced mod p
            out.append(F.mul(F.embed_int(i), ci) if F.p != 2 else (ci if i % 2 else 0))
        return Poly(F, out)

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def eval_many(self, xs: Sequence[int]) -> list[int]:
        return [self.eval(x) for x in xs]


def lagrange_interpolate(field: Field, points: Sequence[tuple[int, int]]) -> Poly:
    """Unique polynomial of degree < len(points) through the given points.

    Raises ValueError on duplicate abscissae.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation abscissae must be pairwise distinct")
    F = field
    result = Poly.zero(F)
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly.one(F)
        denom = 1
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * Poly(F, (F.neg(xj), 1))
            denom = F.mul(denom, F.sub(xi, xj))
        result = result + num.scale(F.div(yi, denom))
    return result
