"""Exact arithmetic in the ring of integers of cyclotomic fields.

A value of order n is a redundant length-n integer vector: the coefficients
of 1, zeta, ..., zeta^{n-1} for zeta = exp(2*pi*i/n). Distinct vectors can
denote the same number; semantic equality (cyc_equal) divides the
difference by the n-th cyclotomic polynomial and checks for zero remainder.
Coefficients are plain Python integers, so no overflow is possible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import limits
from .errors import DegenerateOrder, NotAUnit, OrderMismatch, OutOfRange


@dataclass(frozen=True)
class CyclotomicInteger:
    order: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.order < 1:
            raise DegenerateOrder(f"order must be positive, got {self.order}")
        if len(self.coefficients) != self.order:
            raise ValueError(f"need exactly {self.order} coefficients, got {len(self.coefficients)}")

    @classmethod
    def zero(cls, n: int) -> "CyclotomicInteger":
        return cls(n, (0,) * n)

    @classmethod
    def integer(cls, n: int, value: int) -> "CyclotomicInteger":
        return cls(n, (value,) + (0,) * (n - 1))

    @classmethod
    def root_power(cls, n: int, k: int) -> "CyclotomicInteger":
        coeffs = [0] * n
        coeffs[k % n] = 1
        return cls(n, tuple(coeffs))

    @classmethod
    def from_polynomial(cls, n: int, poly_coeffs) -> "CyclotomicInteger":
        """Evaluate an integer polynomial at the primitive n-th root of
        unity; exponents wrap modulo n."""
        coeffs = [0] * n
        for j, v in enumerate(poly_coeffs):
            coeffs[j % n] += v
        return cls(n, tuple(coeffs))

    def __add__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order}")
        return CyclotomicInteger(self.order, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "CyclotomicInteger") -> "CyclotomicInteger":
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order}")
        return CyclotomicInteger(self.order, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.order, tuple(-c for c in self.coefficients))


def _poly_div_exact(num: list[int], den) -> list[int]:
    """Quotient of two integer polynomials, asserting exact division."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    quot = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        t, r = divmod(c, lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i - dn] = t
        for j in range(dn + 1):
            num[i - dn + j] -= t * den[j]
    if any(num[:dn]):
        raise ArithmeticError("nonzero remainder in exact division")
    return quot


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_exact(poly, _cyclotomic(d))
    return tuple(poly)


def cyclotomic_polynomial(n: int, *, order_limit: int | None = None) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Built by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n; monic of degree phi(n).
    """
    if n < 1:
        raise DegenerateOrder(f"cyclotomic polynomial needs n >= 1, got {n}")
    limits.check_order(n, order_limit)
    return _cyclotomic(n)


def _reduce(n: int, coeffs) -> tuple[int, ...]:
    """Remainder of an ascending-degree coefficient vector modulo the n-th
    cyclotomic polynomial; result has length phi(n)."""
    phi = _cyclotomic(n)
    deg = len(phi) - 1
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            for j in range(deg):
                rem[i - deg + j] -= c * phi[j]
            rem[i] = 0
    return tuple(rem[:deg])


def reduce_coefficients(u: CyclotomicInteger) -> tuple[int, ...]:
    """Canonical coefficient vector of u, length phi(order)."""
    return _reduce(u.order, u.coefficients)


def cyc_equal(u: CyclotomicInteger, v: CyclotomicInteger) -> bool:
    """Semantic equality: the difference reduces to zero modulo the
    cyclotomic polynomial of the common order."""
    if u.order != v.order:
        raise OrderMismatch(f"orders {u.order} and {v.order}")
    if u.coefficients == v.coefficients:
        return True
    diff = tuple(a - b for a, b in zip(u.coefficients, v.coefficients))
    return not any(_reduce(u.order, diff))


def galois_apply(a: int, u: CyclotomicInteger) -> CyclotomicInteger:
    """Image of u under the automorphism sending zeta to zeta^a."""
    n = u.order
    a %= n
    if gcd(a, n) != 1:
        raise NotAUnit(f"{a} is not invertible modulo {n}")
    out = [0] * n
    for j, c in enumerate(u.coefficients):
        if c:
            out[a * j % n] += c
    return CyclotomicInteger(n, tuple(out))


def eigenvalue(n: int, connection_set, r: int) -> CyclotomicInteger:
    """Adjacency eigenvalue of the circulant digraph D(n, S) at frequency
    r: the sum of zeta_n^{r*s} over s in the connection set."""
    if not 0 <= r < n:
        raise OutOfRange(f"frequency {r} outside [0, {n})")
    out = [0] * n
    for s in connection_set:
        if not 1 <= s < n:
            raise OutOfRange(f"connection element {s} outside [1, {n})")
        out[r * s % n] += 1
    return CyclotomicInteger(n, tuple(out))
