"""Command-line front door.

Every subcommand prints a single JSON document on stdout; exit codes are
0 (ok), 2 (invalid argument), 3 (resource limit), 4 (numerical
consistency).  All stochastic subcommands take --seed and are fully
determined by it; timing and progress go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass

import numpy as np

from . import serialize
from .bench import bench_group_sum
from .entangled import Subspace, max_entangled_over, orthonormalize, phi_plus, psi_lambda
from .errors import SnverifyError
from .kronecker import kronecker_coefficient
from .selftest import run_selftest
from .symgroup import (
    Partition,
    Permutation,
    enumerate_partitions,
    enumerate_tableaux,
    irrep_dimension,
)
from .verifier import (
    certify_corollary_bound,
    certify_lemma_bound,
    run_verifier_sampled,
    verification_acceptance_operator,
)
from .wfs import lightning_distribution, measure_wfs, wfs_povm, wfs_projector
from .yyrep import (
    character,
    fourier_transform_matrix,
    irrep,
    lift_with_identity,
    rep_evaluate,
    tensor_rep,
)


@dataclass
class CommandResult:
    status: str
    payload: dict
    elapsed_ms: float


def _partition_key(shape: Partition) -> str:
    return "(" + ",".join(str(p) for p in shape.parts) + ")"


def _load_state(path: str) -> np.ndarray:
    with open(path) as fh:
        return serialize.state_from_json(json.load(fh)).amplitudes


def _cmd_sym(args) -> dict:
    if args.action == "partitions":
        shapes = enumerate_partitions(args.n)
        return {"n": args.n, "count": len(shapes), "partitions": [str(s) for s in shapes]}
    shape = Partition.parse(args.shape)
    if args.action == "dim":
        return {"d": irrep_dimension(shape)}
    tableaux = enumerate_tableaux(shape)
    return {
        "shape": str(shape),
        "count": len(tableaux),
        "tableaux": [[list(row) for row in t.rows] for t in tableaux],
    }


def _cmd_rep(args) -> dict:
    if args.action == "ft":
        return serialize.matrix_to_json(fourier_transform_matrix(args.n))
    shape = Partition.parse(args.shape)
    g = Permutation.parse(args.perm)
    rep = irrep(shape)
    if args.action == "matrix":
        return serialize.matrix_to_json(rep_evaluate(rep, g))
    chi = character(rep, g)
    return {"chi": [chi.real, chi.imag]}


def _cmd_wfs(args) -> dict:
    mu, nu = Partition.parse(args.mu), Partition.parse(args.nu)
    sigma = tensor_rep(mu, nu)
    if args.action == "project":
        lam = Partition.parse(args.shape)
        return serialize.projector_to_json(wfs_projector(sigma, lam), lam)
    if args.action == "povm":
        povm = wfs_povm(sigma)
        total = sum(p.matrix for _, p in povm)
        return {
            "sigma": f"{mu} x {nu}",
            "dim": sigma.dim,
            "ranks": {_partition_key(lam): p.rank for lam, p in povm},
            "completeness_residual": float(np.abs(total - np.eye(sigma.dim)).max()),
        }
    # measure
    if args.state:
        psi = _load_state(args.state)
        rep = sigma if psi.shape == (sigma.dim,) else lift_with_identity(sigma, sigma.dim)
    else:
        rep = lift_with_identity(sigma, sigma.dim)
        psi = phi_plus(sigma.dim).amplitudes
    label, post = measure_wfs(rep, psi, args.seed)
    from .entangled import StateVector

    return {
        "label": str(label),
        "post_state": serialize.state_to_json(
            StateVector(registers=(len(post),), amplitudes=post)
        ),
    }


def _cmd_kron(args) -> dict:
    mu, nu, lam = (Partition.parse(t) for t in (args.mu, args.nu, args.shape))
    if args.route == "both":
        result = kronecker_coefficient(mu, nu, lam, route="both")
        return {"m": result.value, "routes_agree": True}
    result = kronecker_coefficient(mu, nu, lam, route=args.route)
    return {"m": result.value, "route": result.route}


def _cmd_lightning(args) -> dict:
    mu, nu = Partition.parse(args.mu), Partition.parse(args.nu)
    dist = lightning_distribution(mu, nu)
    return {_partition_key(lam): prob for lam, prob in dist.items()}


def _xi_subspace(mu: Partition, nu: Partition, lam: Partition) -> Subspace:
    sigma = tensor_rep(mu, nu)
    xi = wfs_projector(sigma, lam)
    evals, evecs = np.linalg.eigh(xi.matrix)
    keep = [k for k in range(len(evals)) if evals[k] > 0.5]
    return Subspace(ambient_dim=sigma.dim, basis=orthonormalize(evecs[:, keep]))


def _cmd_state(args) -> dict:
    if args.action == "phi-plus":
        return serialize.state_to_json(phi_plus(args.d))
    mu, nu, lam = (Partition.parse(t) for t in (args.mu, args.nu, args.shape))
    if args.action == "phi-pi":
        return serialize.state_to_json(max_entangled_over(_xi_subspace(mu, nu, lam)))
    # psi-lambda
    sigma = tensor_rep(mu, nu)
    phi = _load_state(args.state) if args.state else phi_plus(sigma.dim).amplitudes
    state, normalization = psi_lambda(sigma, lam, phi)
    return {
        "state": serialize.state_to_json(state),
        "normalization": normalization,
    }


def _report_json(report) -> dict:
    return {
        "acceptance_probability": report.acceptance_probability,
        "epsilon": report.epsilon,
        "distance_to_target": report.distance_to_target,
        "bound": report.bound,
        "bound_satisfied": report.bound_satisfied,
    }


def _cmd_verify(args) -> dict:
    mu, nu, lam = (Partition.parse(t) for t in (args.mu, args.nu, args.shape))
    if args.action == "spectrum":
        op = verification_acceptance_operator(mu, nu, lam)
        return {
            "spectrum": [float(v) for v in op.spectrum],
            "c": op.c,
            "s": op.s,
            "eigenvalue_one_multiplicity": int(np.sum(op.spectrum > 1.0 - 1e-8)),
        }
    if args.action == "certify":
        trials = certify_corollary_bound(
            mu, nu, lam, args.trials, args.seed, perturbation=args.perturbation
        )
        corollary = [_report_json(t.corollary) for t in trials]
        theorem = [_report_json(t.theorem) for t in trials]
        return {
            "trials": args.trials,
            "seed": args.seed,
            "violations": sum(
                (not t.corollary.bound_satisfied) + (not t.theorem.bound_satisfied)
                for t in trials
            ),
            "corollary_reports": corollary,
            "theorem_reports": theorem,
        }
    # run
    psi = _load_state(args.state)
    return run_verifier_sampled(mu, nu, lam, psi, args.seed)


def _cmd_certify_lemma(args) -> dict:
    shape = Partition.parse(args.shape)
    from .yyrep import identity_times_irrep

    rep = identity_times_irrep(args.multiplicity, shape)
    reports = certify_lemma_bound(
        rep, args.trials, args.seed, perturbation=args.perturbation
    )
    return {
        "trials": args.trials,
        "seed": args.seed,
        "violations": sum(not r.bound_satisfied for r in reports),
        "reports": [_report_json(r) for r in reports],
    }


def _cmd_selftest(args) -> dict:
    report, timings = run_selftest(n_max=args.n_max, trials=args.trials, seed=args.seed)
    for name, seconds in timings.items():
        print(f"{name}: {seconds:.3f}s", file=sys.stderr)
    return report


def _cmd_bench(args) -> dict:
    n_values = tuple(int(tok) for tok in args.n.split(","))
    return bench_group_sum(n_values=n_values, workers=args.workers)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="snverify",
        description="Symmetric-group representation and verification toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sym = sub.add_parser("sym", help="partitions, dimensions, tableaux")
    sym_sub = p_sym.add_subparsers(dest="action", required=True)
    p = sym_sub.add_parser("partitions")
    p.add_argument("n", type=int)
    p = sym_sub.add_parser("dim")
    p.add_argument("shape")
    p = sym_sub.add_parser("tableaux")
    p.add_argument("shape")

    p_rep = sub.add_parser("rep", help="irrep matrices, characters, Fourier transform")
    rep_sub = p_rep.add_subparsers(dest="action", required=True)
    p = rep_sub.add_parser("matrix")
    p.add_argument("shape")
    p.add_argument("perm")
    p = rep_sub.add_parser("char")
    p.add_argument("shape")
    p.add_argument("perm")
    p = rep_sub.add_parser("ft")
    p.add_argument("n", type=int)

    p_wfs = sub.add_parser("wfs", help="weak Fourier sampling")
    wfs_sub = p_wfs.add_subparsers(dest="action", required=True)
    p = wfs_sub.add_parser("project")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p = wfs_sub.add_parser("povm")
    p.add_argument("mu")
    p.add_argument("nu")
    p = wfs_sub.add_parser("measure")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("--state", help="state JSON file; defaults to the maximally entangled state")
    p.add_argument("--seed", type=int, default=0)

    p_kron = sub.add_parser("kron", help="Kronecker coefficients")
    p_kron.add_argument("mu")
    p_kron.add_argument("nu")
    p_kron.add_argument("shape")
    p_kron.add_argument("--route", choices=["char", "rank", "both"], default="both")

    p_light = sub.add_parser("lightning", help="irrep sampling distribution")
    p_light.add_argument("mu")
    p_light.add_argument("nu")

    p_state = sub.add_parser("state", help="entangled state constructions")
    state_sub = p_state.add_subparsers(dest="action", required=True)
    p = state_sub.add_parser("phi-plus")
    p.add_argument("d", type=int)
    p = state_sub.add_parser("phi-pi")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p = state_sub.add_parser("psi-lambda")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p.add_argument("--state", help="input state JSON file")

    p_verify = sub.add_parser("verify", help="verification algorithm")
    verify_sub = p_verify.add_subparsers(dest="action", required=True)
    p = verify_sub.add_parser("spectrum")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p = verify_sub.add_parser("certify")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perturbation", type=float, default=None)
    p = verify_sub.add_parser("run")
    p.add_argument("mu")
    p.add_argument("nu")
    p.add_argument("shape")
    p.add_argument("--state", required=True)
    p.add_argument("--seed", type=int, default=0)

    p_lemma = sub.add_parser(
        "certify-lemma", help="internal-test bound for identity-times-irrep"
    )
    p_lemma.add_argument("shape")
    p_lemma.add_argument("--multiplicity", type=int, default=1)
    p_lemma.add_argument("--trials", type=int, default=100)
    p_lemma.add_argument("--seed", type=int, default=0)
    p_lemma.add_argument("--perturbation", type=float, default=None)

    p_self = sub.add_parser("selftest", help="run every invariant suite")
    p_self.add_argument("--n-max", type=int, default=5)
    p_self.add_argument("--trials", type=int, default=100)
    p_self.add_argument("--seed", type=int, default=0)

    p_bench = sub.add_parser("bench", help="group-sum kernel throughput")
    p_bench.add_argument("--n", default="4,5,6")
    p_bench.add_argument("--workers", type=int, default=4)

    return parser


_HANDLERS = {
    "sym": _cmd_sym,
    "rep": _cmd_rep,
    "wfs": _cmd_wfs,
    "kron": _cmd_kron,
    "lightning": _cmd_lightning,
    "state": _cmd_state,
    "verify": _cmd_verify,
    "certify-lemma": _cmd_certify_lemma,
    "selftest": _cmd_selftest,
    "bench": _cmd_bench,
}

_STATUS_BY_CODE = {2: "invalid-argument", 3: "resource-limit", 4: "numerical-consistency"}


def run(argv: list[str]) -> CommandResult:
    """Execute one CLI invocation; returns the result without printing."""
    parser = build_parser()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        payload = _HANDLERS[args.command](args)
        status = "ok"
    except SnverifyError as exc:
        status = _STATUS_BY_CODE.get(exc.exit_code, "error")
        payload = {"error": str(exc), "status": status}
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return CommandResult(status=status, payload=payload, elapsed_ms=elapsed_ms)


def _round_floats(obj, digits: int):
    if isinstance(obj, float):
        if obj == 0 or not math.isfinite(obj):
            return obj
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, list):
        return [_round_floats(v, digits) for v in obj]
    if isinstance(obj, dict):
        return {k: _round_floats(v, digits) for k, v in obj.items()}
    return obj


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    pretty = "--pretty" in argv
    if pretty:
        argv.remove("--pretty")
    try:
        result = run(argv)
    except SystemExit as exc:  # argparse usage errors
        return 2 if exc.code else 0
    payload = result.payload
    if pretty:
        print(json.dumps(_round_floats(payload, 6), indent=2))
    else:
        print(json.dumps(payload))
    if result.status != "ok":
        for code, name in _STATUS_BY_CODE.items():
            if name == result.status:
                return code
        return 1
    if result.payload.get("all_passed") is False:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
