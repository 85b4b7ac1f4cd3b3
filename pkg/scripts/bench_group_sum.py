#!/usr/bin/env python3
"""Benchmark the isotypic-projector group-sum kernel, single- vs
multi-threaded.  Informational only; results never gate anything.
"""

import argparse
import json
import sys

from snverify.bench import bench_group_sum


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", default="4,5,6", help="comma-separated degrees")
    parser.add_argument("--workers", type=int, default=4)
    args = parser.parse_args()
    n_values = tuple(int(tok) for tok in args.n.split(","))
    print(json.dumps(bench_group_sum(n_values=n_values, workers=args.workers), indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
