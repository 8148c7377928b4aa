"""Finite fields GF(p^k) and univariate polynomials over them.

A field element is an ``int`` in ``range(p**k)`` whose base-``p`` digits
(little-endian) are its coordinates in the basis ``1, a, a^2, ...`` where
``a`` is a root of the user-supplied modulus.  Polynomials are coefficient
tuples, low degree first, with no trailing zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arith import is_prime, prime_factors
from .errors import (
    ConstantPolynomial,
    DivisionByZeroPoly,
    FieldMismatch,
    InvalidInput,
    NonPrimeP,
)

NEG_INF = float("-inf")


@dataclass(frozen=True)
class FiniteField:
    p: int
    k: int
    modulus: tuple[int, ...]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))
        if not is_prime(self.p):
            raise NonPrimeP(f"p={self.p} is not prime")
        if self.k < 1 or len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise InvalidInput(f"modulus must be monic of degree k={self.k}, got {list(self.modulus)}")
        if self.check and self.k > 1:
            base = prime_field(self.p)
            if not is_irreducible(FieldPoly(base, self.modulus)):
                raise InvalidInput(f"modulus {list(self.modulus)} is reducible over F_{self.p}")

    @property
    def size(self) -> int:
        return self.p**self.k

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        if len(digits) > self.k:
            if any(digits[self.k:]):
                raise InvalidInput(f"element {list(digits)} has more than k={self.k} digits")
            digits = digits[: self.k]
        if any(not 0 <= d < self.p for d in digits):
            raise InvalidInput(f"digits {list(digits)} out of range for p={self.p}")
        return sum(d * self.p**i for i, d in enumerate(digits))

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        return self.from_digits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        return self.from_digits([-x % self.p for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        return _mul(self, a, b)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.size - 2)

    def elements(self) -> range:
        return range(self.size)


@lru_cache(maxsize=1 << 16)
def _mul(F: FiniteField, a: int, b: int) -> int:
    p, k, mod = F.p, F.k, F.modulus
    x, y = F.digits(a), F.digits(b)
    prod = [0] * (2 * k - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                prod[i + j] = (prod[i + j] + xi * yj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    return F.from_digits(prod[:k])


@lru_cache(maxsize=None)
def prime_field(p: int) -> FiniteField:
    return FiniteField(p, 1, (0, 1), check=False)


@dataclass(frozen=True)
class FieldPoly:
    field: FiniteField
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        if any(not 0 <= a < self.field.size for a in c):
            raise InvalidInput(f"coefficients {c} out of range for a field of size {self.field.size}")
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def x(cls, F: FiniteField) -> FieldPoly:
        return cls(F, (0, 1))

    @classmethod
    def const(cls, F: FiniteField, a: int) -> FieldPoly:
        return cls(F, (a,))

    @property
    def degree(self):
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def _same(self, other: FieldPoly) -> None:
        if not isinstance(other, FieldPoly) or other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: FieldPoly) -> FieldPoly:
        self._same(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return FieldPoly(F, tuple(F.add(x, y) for x, y in zip(a, b)))

    def __neg__(self) -> FieldPoly:
        return FieldPoly(self.field, tuple(self.field.neg(x) for x in self.coeffs))

    def __sub__(self, other: FieldPoly) -> FieldPoly:
        return self + (-other)

    def __mul__(self, other: FieldPoly) -> FieldPoly:
        self._same(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return FieldPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return FieldPoly(F, tuple(out))

    def scale(self, a: int) -> FieldPoly:
        return FieldPoly(self.field, tuple(self.field.mul(a, x) for x in self.coeffs))

    def __divmod__(self, other: FieldPoly) -> tuple[FieldPoly, FieldPoly]:
        self._same(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = F.inv(other.lead)
        quot = [0] * max(0, len(rem) - db)
        for d in range(len(rem) - 1, db - 1, -1):
            c = rem[d]
            if not c:
                continue
            f = F.mul(c, inv_lead)
            quot[d - db] = f
            for j, b in enumerate(other.coeffs):
                rem[d - db + j] = F.sub(rem[d - db + j], F.mul(f, b))
        return FieldPoly(F, tuple(quot)), FieldPoly(F, tuple(rem[:db]) if db else ())

    def __floordiv__(self, other: FieldPoly) -> FieldPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: FieldPoly) -> FieldPoly:
        return divmod(self, other)[1]

    def monic(self) -> FieldPoly:
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def __call__(self, a: int) -> int:
        F = self.field
        out = 0
        for c in reversed(self.coeffs):
            out = F.add(F.mul(out, a), c)
        return out

    def __repr__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"[{c}]{mono}" if mono else f"[{c}]")
        return " + ".join(terms)


def poly_gcd(a: FieldPoly, b: FieldPoly) -> FieldPoly:
    """Monic gcd (zero only if both inputs are zero)."""
    a._same(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def powmod(a: FieldPoly, e: int, mod: FieldPoly) -> FieldPoly:
    if e < 0:
        raise InvalidInput("negative exponent")
    result = FieldPoly.const(a.field, 1) % mod
    base = a % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def poly_arith(a: FieldPoly, b: FieldPoly, op: str, mod: FieldPoly | None = None):
    """Dispatch ``op`` in {add, mul, divmod, gcd, powmod}; for powmod ``b`` is an int exponent."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    if op == "powmod":
        if mod is None:
            raise InvalidInput("powmod needs a modulus")
        return powmod(a, b, mod)
    raise InvalidInput(f"unknown op {op!r}")


def is_irreducible(f: FieldPoly) -> bool:
    """Rabin's test over the coefficient field of ``f``."""
    if f.is_zero() or f.degree < 1:
        raise ConstantPolynomial(f"{f!r} is constant")
    f = f.monic()
    d = int(f.degree)
    if d == 1:
        return True
    q = f.field.size
    x = FieldPoly.x(f.field)
    frob = [x % f]  # frob[j] = x^(q^j) mod f
    for _ in range(d):
        frob.append(powmod(frob[-1], q, f))
    if (frob[d] - x) % f != FieldPoly(f.field):
        return False
    for ell in prime_factors(d):
        if poly_gcd(f, frob[d // ell] - x).degree != 0:
            return False
    return True
