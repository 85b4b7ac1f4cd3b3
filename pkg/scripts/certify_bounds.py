#!/usr/bin/env python3
"""Monte-Carlo certification of the verifier robustness bounds.

Runs the internal-state-test bound (distance <= 2 sqrt(2 eps)) on an
identity-times-irrep instance and the full-verifier bound
(distance <= 3 sqrt(2 eps)) on a tensor-irrep triple, then prints a
summary with the worst observed bound slack.
"""

import argparse
import json
import sys

from snverify.symgroup import Partition
from snverify.verifier import certify_corollary_bound, certify_lemma_bound
from snverify.yyrep import identity_times_irrep


def slack(reports):
    return min(r.bound - r.distance_to_target for r in reports)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--shape", default="2,1", help="irrep label, e.g. 2,1")
    parser.add_argument("--multiplicity", type=int, default=2)
    parser.add_argument("--triple", default="2,1;2,1;2,1", help="mu;nu;lambda")
    parser.add_argument("--trials", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--perturbation", type=float, default=None)
    args = parser.parse_args()

    rep = identity_times_irrep(args.multiplicity, Partition.parse(args.shape))
    lemma = certify_lemma_bound(rep, args.trials, args.seed, perturbation=args.perturbation)
    mu, nu, lam = (Partition.parse(t) for t in args.triple.split(";"))
    full = certify_corollary_bound(
        mu, nu, lam, args.trials, args.seed, perturbation=args.perturbation
    )
    summary = {
        "trials": args.trials,
        "seed": args.seed,
        "internal_test": {
            "instance": f"I_{args.multiplicity} x {args.shape}",
            "violations": sum(not r.bound_satisfied for r in lemma),
            "min_slack": slack(lemma),
        },
        "full_verifier": {
            "instance": args.triple,
            "violations": sum(not t.corollary.bound_satisfied for t in full),
            "min_slack": slack([t.corollary for t in full]),
            "post_sampling_violations": sum(not t.theorem.bound_satisfied for t in full),
        },
    }
    print(json.dumps(summary, indent=2))
    bad = summary["internal_test"]["violations"] + summary["full_verifier"]["violations"]
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
