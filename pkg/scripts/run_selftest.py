#!/usr/bin/env python3
"""Run every invariant suite and print the JSON report.

Equivalent to `snverify selftest`; kept as a script for batch runs.
Timings go to stderr so the stdout report stays byte-reproducible.
"""

import argparse
import json
import sys

from snverify.selftest import run_selftest


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=5)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    report, timings = run_selftest(n_max=args.n_max, trials=args.trials, seed=args.seed)
    for name, seconds in timings.items():
        print(f"{name}: {seconds:.3f}s", file=sys.stderr)
    print(json.dumps(report))
    return 0 if report["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
