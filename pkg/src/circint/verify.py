"""Verification harnesses: block test vs exact oracle, block-sum checks.

cross_verify runs the fast union-of-blocks decision and the exact
eigenvalue oracle side by side over subsets of {1, ..., n-1}, either
exhaustively or on seeded random samples (each subset drawn as n-1
independent fair bits, bit i covering residue i+1). lemma1_check tests
the structural properties the block construction promises: every block's
power-sum vector is entrywise fixed by the Galois subgroup at modulus n,
and blocks have pairwise disjoint nonempty supports.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import limits
from .cyclotomic import CyclotomicInteger, cyc_equal, galois_apply
from .errors import DegenerateOrder, LimitExceeded, UnsupportedLattice
from .fields import AbelianField, field_gaussian, field_rationals, galois_subgroup_mod
from .integrality import CirculantSpec, is_integral
from .oracle import GAUSSIAN_LATTICE, RATIONAL_LATTICE, numeric_lattice_check, oracle_is_integral
from .orbits import orbit_partition


@dataclass(frozen=True)
class VerificationReport:
    n: int
    field: str
    mode: str
    cases_checked: int
    mismatches: tuple
    seed: int | None
    elapsed_ms: int

    def __post_init__(self):
        if self.cases_checked < 1:
            raise ValueError("a report must cover at least one case")

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self, include_elapsed: bool = True) -> dict:
        out = {
            "n": self.n,
            "field": self.field,
            "mode": self.mode,
            "cases": self.cases_checked,
            "mismatches": list(self.mismatches),
            "seed": self.seed,
        }
        if include_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _subset_masks(n: int, samples: int | None, seed: int, exhaustive_bound: int | None):
    if n < 2:
        raise DegenerateOrder(f"verification needs n >= 2, got {n}")
    if samples is None:
        bound = limits.EXHAUSTIVE_BOUND if exhaustive_bound is None else exhaustive_bound
        if n > bound:
            raise LimitExceeded(f"exhaustive sweep needs n <= {bound}, got {n}")
        return range(1 << (n - 1)), "exhaustive", None
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = random.Random(seed)
    return [rng.getrandbits(n - 1) for _ in range(samples)], "sample", seed


def _members(mask: int, n: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(n - 1) if mask >> i & 1)


def cross_verify(n: int, field: AbelianField, *, samples: int | None = None, seed: int = 0,
                 exhaustive_bound: int | None = None, modulus_limit: int | None = None,
                 order_limit: int | None = None) -> VerificationReport:
    """Compare is_integral against oracle_is_integral subset by subset.

    samples=None sweeps all 2^(n-1) subsets (n capped by the exhaustive
    bound); otherwise that many seeded random subsets are drawn. Mismatch
    entries record the subset with the oracle verdict as expected value,
    sorted by subset.
    """
    start = time.perf_counter()
    limits.check_order(n, order_limit)
    masks, mode, used_seed = _subset_masks(n, samples, seed, exhaustive_bound)
    mismatches = []
    cases = 0
    for mask in masks:
        spec = CirculantSpec(n, _members(mask, n))
        fast = is_integral(spec, field, modulus_limit=modulus_limit).integral
        slow = oracle_is_integral(spec, field, modulus_limit=modulus_limit, order_limit=order_limit)
        if fast != slow:
            mismatches.append({"S": list(spec.connection_set), "expected": slow, "got": fast})
        cases += 1
    mismatches.sort(key=lambda m: m["S"])
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(n, field.describe(), mode, cases, tuple(mismatches), used_seed, elapsed)


def lattice_cross_verify(n: int, field: AbelianField, tol: float = 1e-6, *,
                         samples: int | None = None, seed: int = 0,
                         exhaustive_bound: int | None = None, modulus_limit: int | None = None,
                         order_limit: int | None = None) -> VerificationReport:
    """Floating-point sanity sweep: lattice proximity vs the exact oracle.

    Supported only for the rationals (rational-integer lattice) and the
    Gaussian rationals (Gaussian-integer lattice); advisory by design.
    """
    start = time.perf_counter()
    limits.check_order(n, order_limit)
    if field == field_rationals():
        lattice = RATIONAL_LATTICE
    elif field == field_gaussian():
        lattice = GAUSSIAN_LATTICE
    else:
        raise UnsupportedLattice(f"numeric check supports Q and Qi only, not {field.describe()}")
    masks, mode, used_seed = _subset_masks(n, samples, seed, exhaustive_bound)
    mismatches = []
    cases = 0
    for mask in masks:
        spec = CirculantSpec(n, _members(mask, n))
        approx = numeric_lattice_check(spec, lattice, tol)
        exact = oracle_is_integral(spec, field, modulus_limit=modulus_limit, order_limit=order_limit)
        if approx != exact:
            mismatches.append({"S": list(spec.connection_set), "expected": exact, "got": approx})
        cases += 1
    mismatches.sort(key=lambda m: m["S"])
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(n, field.describe(), "numeric", cases, tuple(mismatches), used_seed, elapsed)


def lemma1_check(n: int, field: AbelianField, *, modulus_limit: int | None = None,
                 order_limit: int | None = None) -> VerificationReport:
    """Check the testable block properties in exact arithmetic.

    One case per (block, frequency) pair verifies that the block's
    power sum at that frequency is fixed by the whole Galois subgroup at
    modulus n, i.e. lies in the target field; one case per block pair
    verifies disjoint supports. Empty blocks are rejected outright.
    """
    start = time.perf_counter()
    limits.check_order(n, order_limit)
    part = orbit_partition(n, field, modulus_limit=modulus_limit)
    fixers = galois_subgroup_mod(field, n, modulus_limit=modulus_limit).elements
    cases = 0
    mismatches = []
    for bi, block in enumerate(part.blocks):
        if not block.members:
            mismatches.append({"block": bi, "empty": True})
        for s in range(1, n):
            coeffs = [0] * n
            for j in block.members:
                coeffs[s * j % n] += 1
            value = CyclotomicInteger(n, tuple(coeffs))
            for a in fixers:
                if a == 1:
                    continue
                if not cyc_equal(galois_apply(a, value), value):
                    mismatches.append({"block": bi, "s": s, "moved_by": a})
                    break
            cases += 1
    for i in range(len(part.blocks)):
        si = set(part.blocks[i].members)
        for j in range(i + 1, len(part.blocks)):
            overlap = si.intersection(part.blocks[j].members)
            if overlap:
                mismatches.append({"blocks": [i, j], "overlap": sorted(overlap)})
            cases += 1
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(n, field.describe(), "lemma1", cases, tuple(mismatches), None, elapsed)
