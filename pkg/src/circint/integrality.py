"""Integrality decisions and enumeration of integral connection sets.

A circulant digraph D(n, S) is integral over an abelian field exactly when
S is a union of whole orbit blocks. Enumeration therefore walks the
2^r block subsets; "how many integral digraphs" here always means how many
distinct connection sets, with no identification of isomorphic digraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from . import limits
from .errors import DegenerateOrder, InvalidSet, TooManyOrbits
from .fields import AbelianField, field_gaussian
from .orbits import OrbitPartition, orbit_partition, r_count


@dataclass(frozen=True)
class CirculantSpec:
    """A circulant digraph D(n, S): order n and loop-free connection set."""

    order: int
    connection_set: tuple[int, ...]

    def __post_init__(self):
        if self.order < 2:
            raise DegenerateOrder(f"need at least 2 vertices, got {self.order}")
        for s in self.connection_set:
            if s == 0:
                raise InvalidSet(
                    "0 is not allowed in a connection set: a loop adds 1 to "
                    "every eigenvalue and never changes integrality"
                )
            if not 1 <= s < self.order:
                raise InvalidSet(f"connection element {s} outside [1, {self.order})")
        if list(self.connection_set) != sorted(set(self.connection_set)):
            raise InvalidSet("connection set must be strictly increasing")

    @classmethod
    def of(cls, order: int, members) -> "CirculantSpec":
        """Build from any iterable of residues, normalizing order and
        duplicates."""
        return cls(order, tuple(sorted(set(members))))


@dataclass(frozen=True)
class BlockViolation:
    block_index: int
    missing: tuple[int, ...]
    present: tuple[int, ...]


@dataclass(frozen=True)
class IntegralityVerdict:
    integral: bool
    block_indices: tuple[int, ...] | None = None
    violation: BlockViolation | None = None

    def __post_init__(self):
        if self.integral != (self.block_indices is not None) or self.integral != (self.violation is None):
            raise ValueError("verdict carries exactly one of block_indices / violation")


def _classify(partition: OrbitPartition, members: frozenset[int]) -> IntegralityVerdict:
    covered = []
    for i, block in enumerate(partition.blocks):
        inside = [x for x in block.members if x in members]
        if len(inside) == len(block.members):
            covered.append(i)
        elif inside:
            missing = tuple(x for x in block.members if x not in members)
            return IntegralityVerdict(False, violation=BlockViolation(i, missing, tuple(inside)))
    return IntegralityVerdict(True, block_indices=tuple(covered))


def is_integral(spec: CirculantSpec, field: AbelianField, *, modulus_limit: int | None = None) -> IntegralityVerdict:
    """Decide integrality over the field: the connection set must be a
    union of whole orbit blocks. The verdict carries either the covered
    block indices or the first partially covered block as witness."""
    part = orbit_partition(spec.order, field, modulus_limit=modulus_limit)
    return _classify(part, frozenset(spec.connection_set))


def is_gauss_integral(spec: CirculantSpec, *, modulus_limit: int | None = None) -> IntegralityVerdict:
    """Integrality over the Gaussian rationals (eigenvalues in Z[i])."""
    return is_integral(spec, field_gaussian(), modulus_limit=modulus_limit)


def count_integral(n: int, field: AbelianField, *, modulus_limit: int | None = None) -> int:
    """Exact number of integral connection sets: 2 to the block count."""
    return 1 << r_count(n, field, modulus_limit=modulus_limit)


def enumerate_integral(n: int, field: AbelianField, limit: int | None = None, *,
                       budget: int | None = None, modulus_limit: int | None = None):
    """Stream every integral connection set exactly once.

    Order is the binary counter over canonical block indices (bit i covers
    block i): the empty set comes first and all of {1, ..., n-1} last.
    Without an explicit ``limit`` the full count must fit the enumeration
    budget.
    """
    part = orbit_partition(n, field, modulus_limit=modulus_limit)
    r = len(part.blocks)
    total = 1 << r
    cap = limits.ENUM_BUDGET if budget is None else budget
    if limit is None and total > cap:
        raise TooManyOrbits(f"2^{r} = {total} sets exceeds budget {cap}; pass a limit")

    def _generate():
        emitted = 0
        for mask in range(total):
            if limit is not None and emitted >= limit:
                return
            members = sorted(chain.from_iterable(
                b.members for i, b in enumerate(part.blocks) if mask >> i & 1))
            yield CirculantSpec(n, tuple(members))
            emitted += 1

    return _generate()


def verdict_to_json(spec: CirculantSpec, field: AbelianField, verdict: IntegralityVerdict) -> dict:
    out = {
        "n": spec.order,
        "S": list(spec.connection_set),
        "field": field.describe(),
        "integral": verdict.integral,
        "blocks": list(verdict.block_indices) if verdict.integral else None,
        "violation": None,
    }
    if verdict.violation is not None:
        v = verdict.violation
        out["violation"] = {"block": v.block_index, "missing": list(v.missing), "present": list(v.present)}
    return out
