"""Resource guards.

Desk-scale inputs are the design point; anything larger is refused loudly
with LimitExceeded instead of grinding or overflowing silently.
"""

from __future__ import annotations

import os

from .errors import CircError, LimitExceeded

MODULUS_LIMIT = 100_000
EXACT_ORDER_LIMIT = 10_000
ENUM_BUDGET = 1 << 20
EXHAUSTIVE_BOUND = 14

ENV_MODULUS = "CIRC_LIMIT_MODULUS"
ENV_ENUM = "CIRC_LIMIT_ENUM"


def check_modulus(n: int, limit: int | None = None) -> None:
    bound = MODULUS_LIMIT if limit is None else limit
    if n > bound:
        raise LimitExceeded(f"modulus {n} exceeds limit {bound}")


def check_order(n: int, limit: int | None = None) -> None:
    bound = EXACT_ORDER_LIMIT if limit is None else limit
    if n > bound:
        raise LimitExceeded(f"order {n} exceeds exact-arithmetic limit {bound}")


def env_limit(name: str) -> int | None:
    """Read an integer override from the environment; None when unset."""
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise CircError(f"environment variable {name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise CircError(f"environment variable {name} must be positive, got {value}")
    return value
