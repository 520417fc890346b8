#!/usr/bin/env python3
"""Run the full verification suite and write the JSON report."""
import argparse
import sys

from cmlog.verify import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--mutate", action="store_true", help="use the sign-flipped density")
    ap.add_argument("--output", "-o", default="verification_report.json")
    args = ap.parse_args()

    report = run_all(seed=args.seed, mutate=args.mutate)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(report.to_json() + "\n")
    for r in report.results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name}")
        if r.diagnostic:
            print(f"      {r.diagnostic}")
    s = report.summary()
    print(f"{s['passed']}/{s['total']} passed; report written to {args.output}")
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
