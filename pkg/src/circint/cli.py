"""Command-line interface.

Subcommands: partition, check, enumerate, spectrum, verify. Standard
output carries machine-readable JSON (JSON Lines for streams) and is
byte-identical across repeated identical invocations; timings and error
text go to standard error. Exit codes: 0 success or integral, 1 valid
negative result (not integral, or mismatches found), 2 usage or input
error, 3 resource limit exceeded.

Environment: CIRC_LIMIT_MODULUS and CIRC_LIMIT_ENUM override the default
modulus bound and enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import limits
from .cyclotomic import eigenvalue, reduce_coefficients
from .errors import CircError, InvalidSet, LimitExceeded, TooManyOrbits
from .fields import parse_field
from .integrality import CirculantSpec, count_integral, enumerate_integral, is_integral, verdict_to_json
from .oracle import numeric_spectrum
from .orbits import orbit_partition
from .verify import cross_verify, lattice_cross_verify, lemma1_check

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _sig(x: float) -> float:
    """Round to 12 significant digits for platform-stable JSON; magnitudes
    below 1e-12 are rounding noise of an exact zero and print as 0."""
    if abs(x) < 1e-12:
        return 0.0
    return float(f"{x:.12g}")


def _modulus_limit() -> int | None:
    return limits.env_limit(limits.ENV_MODULUS)


def _enum_budget() -> int | None:
    return limits.env_limit(limits.ENV_ENUM)


def _parse_members(text: str) -> list[int]:
    try:
        return sorted({int(x) for x in text.split(",") if x.strip() != ""})
    except ValueError:
        raise InvalidSet(f"bad set spec {text!r}: expected a comma list of residues") from None


def _parse_set_spec(text: str, n: int, field, modulus_limit: int | None) -> list[int]:
    t = text.strip()
    if t.startswith("blocks:"):
        if field is None:
            raise InvalidSet("blocks: selector needs a field; use the check command")
        part = orbit_partition(n, field, modulus_limit=modulus_limit)
        try:
            idxs = sorted({int(x) for x in t[7:].split(",") if x.strip() != ""})
        except ValueError:
            raise InvalidSet(f"bad block selector {t!r}") from None
        members: list[int] = []
        for i in idxs:
            if not 0 <= i < len(part.blocks):
                raise InvalidSet(f"block index {i} outside [0, {len(part.blocks)})")
            members.extend(part.blocks[i].members)
        return sorted(members)
    return _parse_members(t)


def _parse_range(text: str) -> tuple[int, int]:
    lo_s, _, hi_s = text.partition("..")
    if not hi_s:
        hi_s = lo_s
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise CircError(f"bad range {text!r}: expected <n> or <lo>..<hi>") from None
    if lo < 2 or hi < lo:
        raise CircError(f"bad range {text!r}: need 2 <= lo <= hi")
    return lo, hi


def _cmd_partition(args) -> int:
    ml = _modulus_limit()
    field = parse_field(args.field, modulus_limit=ml)
    part = orbit_partition(args.n, field, modulus_limit=ml)
    if args.format == "table":
        print(f"n={part.order}\tfield={field.describe()}\tblocks={len(part.blocks)}")
        print("index\tp\tmembers")
        for i, b in enumerate(part.blocks):
            print(f"{i}\t{b.divisor}\t{','.join(map(str, b.members))}")
    else:
        print(_dumps(part.to_json()))
    return EXIT_OK


def _cmd_check(args) -> int:
    ml = _modulus_limit()
    field = parse_field(args.field, modulus_limit=ml)
    members = _parse_set_spec(args.set, args.n, field, ml)
    spec = CirculantSpec.of(args.n, members)
    verdict = is_integral(spec, field, modulus_limit=ml)
    if args.format == "table":
        print(f"n={spec.order}\tfield={field.describe()}\tS={','.join(map(str, spec.connection_set))}")
        if verdict.integral:
            print("integral: yes")
            print(f"blocks: {','.join(map(str, verdict.block_indices))}")
        else:
            v = verdict.violation
            print("integral: no")
            print(f"block {v.block_index} missing {','.join(map(str, v.missing))} "
                  f"present {','.join(map(str, v.present))}")
    else:
        print(_dumps(verdict_to_json(spec, field, verdict)))
    return EXIT_OK if verdict.integral else EXIT_NEGATIVE


def _cmd_enumerate(args) -> int:
    ml = _modulus_limit()
    field = parse_field(args.field, modulus_limit=ml)
    emitted = 0
    for spec in enumerate_integral(args.n, field, limit=args.limit,
                                   budget=_enum_budget(), modulus_limit=ml):
        print(_dumps(verdict_to_json(spec, field, is_integral(spec, field, modulus_limit=ml))))
        emitted += 1
    print(_dumps({"count": emitted, "total": count_integral(args.n, field, modulus_limit=ml)}))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    members = _parse_set_spec(args.set, args.n, None, _modulus_limit())
    spec = CirculantSpec.of(args.n, members)
    n = spec.order
    if args.exact:
        limits.check_order(n)
        rows = [list(reduce_coefficients(eigenvalue(n, spec.connection_set, r))) for r in range(n)]
        mode = "exact"
    else:
        rows = [[_sig(z.real), _sig(z.imag)] for z in numeric_spectrum(spec)]
        mode = "numeric"
    print(_dumps({"n": n, "S": list(spec.connection_set), "mode": mode, "spectrum": rows}))
    return EXIT_OK


def _cmd_verify(args) -> int:
    ml = _modulus_limit()
    field = parse_field(args.field, modulus_limit=ml)
    lo, hi = _parse_range(args.range)
    samples = None if args.exhaustive else args.samples
    if samples is not None and samples < 1:
        raise CircError(f"--samples must be positive, got {samples}")
    all_passed = True
    for n in range(lo, hi + 1):
        reports = [cross_verify(n, field, samples=samples, seed=args.seed, modulus_limit=ml)]
        if args.lemma1:
            reports.append(lemma1_check(n, field, modulus_limit=ml))
        if args.numeric:
            reports.append(lattice_cross_verify(n, field, args.tol, samples=samples,
                                                seed=args.seed, modulus_limit=ml))
        for rep in reports:
            print(_dumps(rep.to_json(include_elapsed=False)))
            print(f"# n={rep.n} mode={rep.mode} cases={rep.cases_checked} "
                  f"elapsed_ms={rep.elapsed_ms}", file=sys.stderr)
            all_passed = all_passed and rep.passed
    return EXIT_OK if all_passed else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circint",
        description="Integrality of circulant digraphs over abelian number fields.",
        epilog="Field specs: Q | Qi | sqrt:<d> | cyclo:<m> | custom:<m>:<g1,g2,...> "
               "(the field must be abelian). See docs/cli.md for the full manual.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="orbit partition of 1..n-1 for a field")
    p.add_argument("n", type=int)
    p.add_argument("--field", required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("check", help="decide integrality of D(n, S) over a field")
    p.add_argument("n", type=int)
    p.add_argument("--set", required=True,
                   help="comma list of residues, or blocks:i,j,... selecting partition blocks")
    p.add_argument("--field", required=True)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("enumerate", help="stream all integral connection sets")
    p.add_argument("n", type=int)
    p.add_argument("--field", required=True)
    p.add_argument("--limit", type=int, default=None, help="stop after this many sets")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("spectrum", help="eigenvalues of D(n, S), exact or numeric")
    p.add_argument("n", type=int)
    p.add_argument("--set", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true",
                      help="coefficient vectors reduced modulo the cyclotomic polynomial")
    mode.add_argument("--numeric", action="store_true", help="floating-point (re, im) pairs")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("verify", help="cross-check the block test against the exact oracle")
    p.add_argument("range", help="single order n or a range lo..hi")
    p.add_argument("--field", required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lemma1", action="store_true", help="also run the block-sum property check")
    p.add_argument("--numeric", action="store_true",
                   help="also run the lattice sanity sweep (Q and Qi only)")
    p.add_argument("--tol", type=float, default=1e-6, help="tolerance for --numeric")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (LimitExceeded, TooManyOrbits) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CircError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    raise SystemExit(main())
