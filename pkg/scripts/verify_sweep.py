#!/usr/bin/env python3
"""Agreement sweep between the block-union test and the exact oracle.

Runs exhaustive sweeps up to a cutoff and seeded samples beyond it, for
every requested field, printing one JSON report line per (n, field) and
exiting nonzero if any mismatch shows up.

Usage: python scripts/verify_sweep.py --hi 20 --samples 300 --seed 11
"""

import argparse
import json
import sys

from circint import cross_verify, lemma1_check, parse_field

DEFAULT_FIELDS = "Q,Qi,sqrt:2,sqrt:-3,cyclo:8"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=2)
    ap.add_argument("--hi", type=int, default=20)
    ap.add_argument("--exhaustive-up-to", type=int, default=12)
    ap.add_argument("--samples", type=int, default=200, help="sample count beyond the cutoff")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--fields", default=DEFAULT_FIELDS)
    ap.add_argument("--lemma1", action="store_true", help="also run block-sum checks")
    args = ap.parse_args()

    fields = [(name, parse_field(name)) for name in args.fields.split(",") if name]
    failures = 0
    for name, field in fields:
        for n in range(args.lo, args.hi + 1):
            if n <= args.exhaustive_up_to:
                report = cross_verify(n, field)
            else:
                report = cross_verify(n, field, samples=args.samples, seed=args.seed)
            print(json.dumps(report.to_json()))
            failures += len(report.mismatches)
            if args.lemma1:
                report = lemma1_check(n, field)
                print(json.dumps(report.to_json()))
                failures += len(report.mismatches)
    if failures:
        print(f"{failures} mismatches found", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
