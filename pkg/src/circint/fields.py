"""Abelian number fields as (conductor, fixing subgroup) pairs.

A field K with conductor m is described by the subgroup H of the units
modulo m whose fixed field is K under the usual identification of
Gal(Q(zeta_m)/Q) with (Z/mZ)*. Only this abelian data ever matters to the
orbit construction, so no other field representation exists here.

Field equality is lenient about labels: two values with the same conductor
and subgroup compare equal. Distinct (conductor, subgroup) pairs can still
denote the same field; compare galois_subgroup_mod outputs when that
distinction matters.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd, lcm

from . import limits
from .errors import BothZero, DegenerateInput, DegenerateOrder, FieldSpecError, NotSquarefree
from .residues import UnitSubgroup, euler_phi, subgroup_closure, units_mod


@dataclass(frozen=True)
class AbelianField:
    conductor: int
    fixing_subgroup: UnitSubgroup
    label: str | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        if self.fixing_subgroup.modulus != self.conductor:
            raise ValueError("fixing subgroup modulus differs from conductor")
        if euler_phi(self.conductor) % len(self.fixing_subgroup):
            raise ValueError("subgroup order does not divide phi(conductor)")

    @property
    def degree(self) -> int:
        """Dimension of the field over the rationals."""
        return euler_phi(self.conductor) // len(self.fixing_subgroup)

    def describe(self) -> str:
        """Display/JSON name; falls back to a parseable custom spec."""
        if self.label:
            return self.label
        gens = ",".join(str(e) for e in self.fixing_subgroup.elements)
        return f"custom:{self.conductor}:{gens}"


def field_rationals() -> AbelianField:
    return AbelianField(1, UnitSubgroup(1, (0,)), label="Q")


def field_gaussian() -> AbelianField:
    """The Gaussian rationals, conductor 4."""
    return AbelianField(4, UnitSubgroup(4, (1,)), label="Qi")


def field_cyclotomic(m: int, *, modulus_limit: int | None = None) -> AbelianField:
    if m < 1:
        raise DegenerateOrder(f"cyclotomic field needs m >= 1, got {m}")
    limits.check_modulus(m, modulus_limit)
    if m == 1:
        return AbelianField(1, UnitSubgroup(1, (0,)), label="cyclo:1")
    return AbelianField(m, UnitSubgroup(m, (1,)), label=f"cyclo:{m}")


def _is_squarefree(d: int) -> bool:
    d = abs(d)
    p = 2
    while p * p <= d:
        if d % (p * p) == 0:
            return False
        if d % p == 0:
            d //= p
        p += 1 if p == 2 else 2
    return True


def field_quadratic(d: int, *, modulus_limit: int | None = None) -> AbelianField:
    """The quadratic field generated by a square root of d.

    The conductor is |disc| with disc = d for d = 1 mod 4 and 4d otherwise;
    the fixing subgroup is the kernel of the discriminant's Kronecker
    character on the units modulo the conductor.
    """
    if d in (0, 1):
        raise DegenerateInput(f"no quadratic field for d = {d}")
    if not _is_squarefree(d):
        raise NotSquarefree(f"{d} has a square factor")
    disc = d if d % 4 == 1 else 4 * d
    m = abs(disc)
    limits.check_modulus(m, modulus_limit)
    members = tuple(a for a in units_mod(m).elements if kronecker_symbol(disc, a) == 1)
    k = AbelianField(m, UnitSubgroup(m, members), label=f"sqrt:{d}")
    assert k.degree == 2
    return k


def kronecker_symbol(a: int, b: int) -> int:
    """The Kronecker symbol (a|b), extending the Jacobi symbol to all b."""
    if a == 0 and b == 0:
        raise BothZero("kronecker symbol undefined at (0, 0)")
    if b == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if b < 0:
        b = -b
        if a < 0:
            result = -result
    twos = 0
    while b % 2 == 0:
        b //= 2
        twos += 1
    if twos:
        if a % 2 == 0:
            return 0
        if twos % 2 == 1 and a % 8 in (3, 5):
            result = -result
    a %= b
    while a:
        while a % 2 == 0:
            a //= 2
            if b % 8 in (3, 5):
                result = -result
        a, b = b, a
        if a % 4 == 3 and b % 4 == 3:
            result = -result
        a %= b
    return result if b == 1 else 0


def galois_subgroup_mod(field: AbelianField, g: int, *, modulus_limit: int | None = None) -> UnitSubgroup:
    """Subgroup of the units mod g fixing the intersection of the field
    with the g-th cyclotomic field.

    Computed as the mod-g image of the units a modulo L = lcm(conductor, g)
    whose reduction mod the conductor lies in the fixing subgroup. The
    index of the result in the full unit group mod g is the degree of the
    intersection field over the rationals.
    """
    if g < 1:
        raise DegenerateOrder(f"galois_subgroup_mod needs g >= 1, got {g}")
    bound = limits.MODULUS_LIMIT if modulus_limit is None else modulus_limit
    return _galois_subgroup_cached(field, g, bound)


@lru_cache(maxsize=None)
def _galois_subgroup_cached(field: AbelianField, g: int, bound: int) -> UnitSubgroup:
    m = field.conductor
    big = lcm(m, g)
    limits.check_modulus(big, bound)
    member = field.fixing_subgroup._member_set
    image = sorted({a % g for a in range(1, big + 1) if gcd(a, big) == 1 and (a % m) in member})
    return UnitSubgroup(g, tuple(image))


def parse_field(text: str, *, modulus_limit: int | None = None) -> AbelianField:
    """Parse the field mini-language.

    Accepted forms: ``Q``, ``Qi``, ``sqrt:<d>``, ``cyclo:<m>``, and
    ``custom:<m>:<g1,g2,...>`` where the g_i generate the fixing subgroup
    (an empty generator list gives the trivial subgroup, i.e. the full
    m-th cyclotomic field). The field must be abelian; that is all this
    representation can express.
    """
    t = text.strip()
    if t == "Q":
        return field_rationals()
    if t == "Qi":
        return field_gaussian()
    if t.startswith("sqrt:"):
        return field_quadratic(_spec_int(t[5:], t), modulus_limit=modulus_limit)
    if t.startswith("cyclo:"):
        m = _spec_int(t[6:], t)
        if m < 1:
            raise FieldSpecError(f"cyclotomic order must be positive in {text!r}")
        return field_cyclotomic(m, modulus_limit=modulus_limit)
    if t.startswith("custom:"):
        parts = t.split(":")
        if len(parts) != 3:
            raise FieldSpecError(f"expected custom:<m>:<g1,g2,...>, got {text!r}")
        m = _spec_int(parts[1], t)
        if m < 1:
            raise FieldSpecError(f"modulus must be positive in {text!r}")
        gens = [_spec_int(x, t) for x in parts[2].split(",") if x.strip() != ""]
        subgroup = subgroup_closure(m, gens, modulus_limit=modulus_limit)
        return AbelianField(m, subgroup, label=t)
    raise FieldSpecError(f"unrecognized field spec {text!r}")


def _spec_int(chunk: str, whole: str) -> int:
    try:
        return int(chunk)
    except ValueError:
        raise FieldSpecError(f"bad integer {chunk!r} in field spec {whole!r}") from None
