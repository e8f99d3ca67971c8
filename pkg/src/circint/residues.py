"""Unit groups, divisor lists, and gcd classes over desk-scale moduli.

Everything here is elementary modular arithmetic; these objects carry the
Galois-group data used by the orbit construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from . import limits
from .errors import DegenerateOrder, NotADivisor, NotAUnit


@dataclass(frozen=True)
class UnitSubgroup:
    """A multiplicatively closed set of residues modulo ``modulus``.

    Elements are stored strictly increasing. The trivial group modulo 1 is
    the single residue 0. Construction runs the cheap structural checks;
    ``validate()`` performs the exhaustive pairwise closure check.
    """

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self):
        g = self.modulus
        if g < 1:
            raise DegenerateOrder(f"modulus must be positive, got {g}")
        els = self.elements
        if g == 1:
            if els != (0,):
                raise ValueError("the group modulo 1 is represented as (0,)")
            return
        if not els or list(els) != sorted(set(els)):
            raise ValueError("elements must be strictly increasing")
        if els[0] < 1 or els[-1] >= g:
            raise ValueError(f"elements must lie in [1, {g})")
        if 1 not in self._member_set:
            raise ValueError("missing identity 1")
        for e in els:
            if gcd(e, g) != 1:
                raise NotAUnit(f"{e} is not a unit modulo {g}")
        for e in els:
            if pow(e, -1, g) not in self._member_set:
                raise ValueError(f"inverse of {e} missing modulo {g}")

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    def validate(self) -> None:
        """Exhaustive subgroup check: every pairwise product stays inside."""
        g = self.modulus
        for a in self.elements:
            for b in self.elements:
                if (a * b) % g not in self._member_set:
                    raise ValueError(f"not closed: {a}*{b} mod {g} escapes")


def euler_phi(n: int, *, modulus_limit: int | None = None) -> int:
    """Order of the unit group modulo n; phi(1) = 1."""
    if n < 1:
        raise DegenerateOrder(f"euler_phi needs n >= 1, got {n}")
    limits.check_modulus(n, modulus_limit)
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if m > 1:
        result -= result // m
    return result


def units_mod(n: int, *, modulus_limit: int | None = None) -> UnitSubgroup:
    """The full unit group modulo n."""
    if n < 1:
        raise DegenerateOrder(f"units_mod needs n >= 1, got {n}")
    limits.check_modulus(n, modulus_limit)
    if n == 1:
        return UnitSubgroup(1, (0,))
    return UnitSubgroup(n, tuple(x for x in range(1, n) if gcd(x, n) == 1))


def subgroup_closure(n: int, generators, *, modulus_limit: int | None = None) -> UnitSubgroup:
    """Smallest multiplicatively closed subset of the units mod n containing
    1 and every generator."""
    if n < 1:
        raise DegenerateOrder(f"subgroup_closure needs n >= 1, got {n}")
    limits.check_modulus(n, modulus_limit)
    if n == 1:
        return UnitSubgroup(1, (0,))
    gens = []
    for gen in generators:
        r = gen % n
        if gcd(r, n) != 1:
            raise NotAUnit(f"generator {gen} shares a factor with {n}")
        gens.append(r)
    members = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for a in gens:
            y = (x * a) % n
            if y not in members:
                members.add(y)
                frontier.append(y)
    return UnitSubgroup(n, tuple(sorted(members)))


def proper_divisors(n: int, *, modulus_limit: int | None = None) -> tuple[int, ...]:
    """All divisors p of n with 1 <= p < n, ascending."""
    if n < 2:
        raise DegenerateOrder(f"no proper divisors for n = {n}")
    limits.check_modulus(n, modulus_limit)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            q = n // d
            if q != d and q != n:
                large.append(q)
        d += 1
    return tuple(small + large[::-1])


def gcd_class(n: int, p: int, *, modulus_limit: int | None = None) -> tuple[int, ...]:
    """Residues x in [1, n) with gcd(x, n) = p, ascending."""
    if n < 2:
        raise DegenerateOrder(f"gcd_class needs n >= 2, got {n}")
    limits.check_modulus(n, modulus_limit)
    if p < 1 or p >= n or n % p != 0:
        raise NotADivisor(f"{p} is not a proper divisor of {n}")
    return tuple(x for x in range(1, n) if gcd(x, n) == p)
