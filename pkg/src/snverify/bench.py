"""Informational benchmark for the isotypic projector group-sum kernel.

Compares the fixed-order compensated sum against a fixed-shape chunked
tree reduction run on a thread pool.  Results never gate acceptance.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .symgroup import Partition, enumerate_group, enumerate_partitions, irrep_dimension
from .yyrep import character, irrep, kahan_sum, rep_evaluate, tensor_rep

CHUNKS = 8  # fixed tree shape, so the reduction is schedule-independent


def _chunk_sum(sigma, lam, elements):
    group_order = math.factorial(sigma.n)
    scale = irrep_dimension(lam) / group_order
    return kahan_sum(
        scale * np.conj(character(sigma, g)) * rep_evaluate(sigma, g) for g in elements
    )


def _sum_single(sigma, lam):
    return _chunk_sum(sigma, lam, enumerate_group(sigma.n))


def _sum_threaded(sigma, lam, workers: int):
    group = enumerate_group(sigma.n)
    bounds = np.linspace(0, len(group), CHUNKS + 1, dtype=int)
    chunks = [
        group[bounds[i] : bounds[i + 1]]
        for i in range(CHUNKS)
        if bounds[i] < bounds[i + 1]
    ]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        partials = list(pool.map(lambda c: _chunk_sum(sigma, lam, c), chunks))
    return kahan_sum(partials)


def bench_group_sum(n_values=(4, 5, 6), workers: int = 4) -> dict:
    results = []
    for n in n_values:
        shapes = enumerate_partitions(n)
        mu = max(shapes, key=lambda s: (irrep_dimension(s), s.parts))
        nu = Partition((n - 1, 1)) if n >= 2 else mu
        sigma = tensor_rep(mu, nu)
        lam = mu
        # warm pass populates the evaluation cache; timed passes measure
        # the summation kernel itself
        _sum_single(sigma, lam)

        start = time.perf_counter()
        single = _sum_single(sigma, lam)
        t_single = time.perf_counter() - start

        start = time.perf_counter()
        threaded = _sum_threaded(sigma, lam, workers)
        t_threaded = time.perf_counter() - start

        size = math.factorial(n)
        results.append(
            {
                "n": n,
                "group_order": size,
                "sigma_dim": sigma.dim,
                "single_thread_s": t_single,
                "threaded_s": t_threaded,
                "workers": workers,
                "single_thread_terms_per_s": size / t_single if t_single > 0 else None,
                "threaded_terms_per_s": size / t_threaded if t_threaded > 0 else None,
                "max_disagreement": float(np.abs(single - threaded).max()),
            }
        )
    return {"kernel": "isotypic-projector-group-sum", "results": results}
