"""Weak Fourier sampling: isotypic projectors, the phase-estimation Kraus
characterization, seeded measurement, and the irrep sampling distribution
on the maximally entangled state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, NumericalConsistencyError, ResourceLimitError
from .symgroup import (
    Partition,
    enumerate_group,
    enumerate_partitions,
    irrep_dimension,
)
from .yyrep import (
    GroupRep,
    character,
    fourier_transform_matrix,
    ft_row_order,
    irrep,
    kahan_sum,
    rep_evaluate,
    tensor_rep,
)

RANK_TOL = 1e-6
# Largest Kraus element we will materialize, in complex entries.
KRAUS_ENTRY_CAP = 1 << 24


@dataclass(frozen=True)
class Projector:
    """A Hermitian idempotent with integer trace."""

    matrix: np.ndarray
    rank: int

    @staticmethod
    def from_matrix(matrix: np.ndarray) -> "Projector":
        trace = np.trace(matrix)
        rank = round(trace.real)
        if abs(trace - rank) > RANK_TOL:
            raise NumericalConsistencyError(
                f"projector trace {trace} is not within {RANK_TOL} of an integer"
            )
        matrix = np.asarray(matrix)
        matrix.setflags(write=False)
        return Projector(matrix=matrix, rank=rank)


@dataclass(frozen=True)
class KrausElement:
    """Kraus element of the generalized phase estimation channel, mapping
    the target space into (control tensor target)."""

    matrix: np.ndarray
    shape_label: Partition


def wfs_projector(rep: GroupRep, shape: Partition) -> Projector:
    """Isotypic projector (d/|G|) sum_g chi^shape(g)* rep(g).

    For a lifted representation sigma tensor I the projector factors as
    Xi tensor I and is computed on the base representation.
    """
    if shape.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: partition of {shape.n}, rep of S_{rep.n}")
    if rep.kind == "lift":
        base = wfs_projector(rep.base, shape)
        mat = np.kron(base.matrix, np.eye(rep.lift_dim, dtype=complex))
        return Projector(matrix=mat, rank=base.rank * rep.lift_dim)
    group = enumerate_group(rep.n)
    lam_rep = irrep(shape)
    scale = lam_rep.dim / len(group)
    terms = (
        scale * np.conj(character(lam_rep, g)) * rep_evaluate(rep, g) for g in group
    )
    return Projector.from_matrix(kahan_sum(terms))


def wfs_povm(rep: GroupRep) -> list[tuple[Partition, Projector]]:
    """One projector per partition of n, in canonical partition order.
    Cached on the representation."""
    cached = rep._povm_cache.get("povm")
    if cached is None:
        cached = [(shape, wfs_projector(rep, shape)) for shape in enumerate_partitions(rep.n)]
        rep._povm_cache["povm"] = cached
    return cached


def gpe_kraus(rep: GroupRep, shape: Partition) -> KrausElement:
    """Kraus element (1/sqrt|G|) sum_g (Pi_shape FT|g>) tensor rep(g) of the
    generalized phase estimation circuit."""
    if shape.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: partition of {shape.n}, rep of S_{rep.n}")
    group = enumerate_group(rep.n)
    size = len(group)
    if size * size * rep.dim * rep.dim > KRAUS_ENTRY_CAP:
        raise ResourceLimitError(
            f"Kraus element would have {size * rep.dim} x {rep.dim} entries with "
            f"|G| = {size}; exceeds the dense entry cap {KRAUS_ENTRY_CAP}"
        )
    ft = fourier_transform_matrix(rep.n)
    rows = np.array([lab == shape for lab, _, _ in ft_row_order(rep.n)])
    out = np.zeros((size * rep.dim, rep.dim), dtype=complex)
    scale = 1.0 / math.sqrt(size)
    for col, g in enumerate(group):
        control = np.where(rows, ft[:, col], 0.0)
        out += scale * np.kron(control[:, None], rep_evaluate(rep, g))
    return KrausElement(matrix=out, shape_label=shape)


def measure_wfs(
    rep: GroupRep, psi: np.ndarray, seed: int
) -> tuple[Partition, np.ndarray]:
    """Sample an irrep label with probability <psi|Xi|psi> and return the
    normalized post-measurement state.  Deterministic given the seed."""
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (rep.dim,):
        raise InvalidArgumentError(f"state has dimension {psi.shape}, rep has {rep.dim}")
    if abs(np.linalg.norm(psi) - 1.0) > 1e-8:
        raise InvalidArgumentError("state must be a unit vector")
    povm = wfs_povm(rep)
    probs = np.array([max((psi.conj() @ p.matrix @ psi).real, 0.0) for _, p in povm])
    total = probs.sum()
    if abs(total - 1.0) > 1e-6:
        raise NumericalConsistencyError(f"measurement probabilities sum to {total}")
    probs = probs / total
    rng = np.random.default_rng(seed)
    choice = rng.choice(len(povm), p=probs)
    shape, proj = povm[choice]
    post = proj.matrix @ psi
    return shape, post / np.linalg.norm(post)


def lightning_distribution(mu: Partition, nu: Partition) -> dict[Partition, float]:
    """Distribution of the sampled irrep label when weak Fourier sampling is
    applied to the maximally entangled state: shape -> (d/(d_mu d_nu)) * m."""
    if mu.n != nu.n:
        raise InvalidArgumentError(f"degree mismatch: {mu} vs {nu}")
    from .kronecker import kronecker_coefficient  # avoid import cycle

    d_mu, d_nu = irrep_dimension(mu), irrep_dimension(nu)
    dist = {}
    for shape in enumerate_partitions(mu.n):
        m = kronecker_coefficient(mu, nu, shape).value
        dist[shape] = irrep_dimension(shape) * m / (d_mu * d_nu)
    total = sum(dist.values())
    if abs(total - 1.0) > 1e-9:
        raise NumericalConsistencyError(f"lightning distribution sums to {total}")
    return dist
