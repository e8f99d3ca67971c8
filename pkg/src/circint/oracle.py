"""Eigenvalue-level integrality oracle, plus floating-point sanity checks.

The exact path decides integrality straight from the definition: every
eigenvalue lies in the order-n cyclotomic ring, so it lies in the target
field exactly when the field's Galois subgroup at modulus n fixes it.
This file deliberately knows nothing about orbit blocks; it is the
independent side of every cross-check.

The numeric helpers are advisory only. Sums of roots of unity can sit
close to lattice points by accident, so nothing here lets floating point
overrule the exact decision.
"""

from __future__ import annotations

import numpy as np

from . import limits
from .cyclotomic import cyc_equal, eigenvalue, galois_apply
from .errors import UnsupportedLattice
from .fields import AbelianField, galois_subgroup_mod

RATIONAL_LATTICE = "rational-integers"
GAUSSIAN_LATTICE = "gaussian-integers"


def oracle_is_integral(spec, field: AbelianField, *, modulus_limit: int | None = None,
                       order_limit: int | None = None) -> bool:
    """True iff every adjacency eigenvalue of D(n, S) is fixed by every
    element of the field's Galois subgroup at modulus n, decided in exact
    cyclotomic arithmetic."""
    n = spec.order
    limits.check_order(n, order_limit)
    fixers = galois_subgroup_mod(field, n, modulus_limit=modulus_limit).elements
    for r in range(n):
        lam = eigenvalue(n, spec.connection_set, r)
        for a in fixers:
            if a == 1:
                continue
            if not cyc_equal(galois_apply(a, lam), lam):
                return False
    return True


def numeric_spectrum(spec) -> list[complex]:
    """Floating-point eigenvalues: the DFT of the connection-set indicator,
    with the eigenvalue at frequency r in position r."""
    n = spec.order
    rs = np.arange(n).reshape(-1, 1)
    ss = np.array(spec.connection_set, dtype=float).reshape(1, -1)
    return np.exp(2j * np.pi * rs * ss / n).sum(axis=1).tolist()


def numeric_lattice_check(spec, lattice: str, tol: float) -> bool:
    """True iff every numeric eigenvalue is within tol (max of the real and
    imaginary deviations) of the nearest point of the chosen lattice.

    Only the rational integers and the Gaussian integers are supported;
    membership in a general field has no simple floating-point test.
    """
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if lattice == RATIONAL_LATTICE:
        snap_imag = False
    elif lattice == GAUSSIAN_LATTICE:
        snap_imag = True
    else:
        raise UnsupportedLattice(f"no floating-point membership test for {lattice!r}")
    for z in numeric_spectrum(spec):
        d_re = abs(z.real - round(z.real))
        d_im = abs(z.imag - round(z.imag)) if snap_imag else abs(z.imag)
        if max(d_re, d_im) > tol:
            return False
    return True
