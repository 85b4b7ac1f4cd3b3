"""Irrep multiplicities and Kronecker coefficients via two independent
routes: character sums over conjugacy classes, and isotypic projector
ranks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InvalidArgumentError, NumericalConsistencyError
from .symgroup import (
    Partition,
    class_representative,
    class_size,
    enumerate_partitions,
    irrep_dimension,
)
from .yyrep import GroupRep, character, irrep_character, tensor_rep

INT_TOL = 1e-6


@dataclass(frozen=True)
class Multiplicity:
    value: int
    route: str

    def __post_init__(self):
        if self.value < 0:
            raise NumericalConsistencyError(f"multiplicity {self.value} is negative")


def _as_integer(value: complex, context: str) -> int:
    k = round(value.real)
    if abs(value - k) > INT_TOL or k < 0:
        raise NumericalConsistencyError(
            f"{context}: value {value} is not a nonnegative integer within {INT_TOL}"
        )
    return k


def multiplicity_character(rep: GroupRep, shape: Partition) -> Multiplicity:
    """m = (1/|G|) sum_g chi^shape(g)* chi^rep(g), summed per conjugacy
    class weighted by class size."""
    if shape.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: partition of {shape.n}, rep of S_{rep.n}")
    size = math.factorial(rep.n)
    total = 0.0 + 0.0j
    for cycle_type in enumerate_partitions(rep.n):
        g = class_representative(cycle_type)
        total += (
            class_size(cycle_type)
            * np.conj(irrep_character(shape, cycle_type))
            * character(rep, g)
        )
    value = _as_integer(total / size, f"multiplicity of {shape} in {rep.kind}")
    return Multiplicity(value=value, route="character-sum")


@lru_cache(maxsize=None)
def _kronecker_char(mu: Partition, nu: Partition, lam: Partition) -> int:
    size = math.factorial(mu.n)
    total = 0.0
    for cycle_type in enumerate_partitions(mu.n):
        total += (
            class_size(cycle_type)
            * irrep_character(lam, cycle_type)
            * irrep_character(mu, cycle_type)
            * irrep_character(nu, cycle_type)
        )
    return _as_integer(complex(total / size), f"kronecker({mu};{nu};{lam})")


def _kronecker_rank(mu: Partition, nu: Partition, lam: Partition) -> int:
    from .wfs import wfs_projector  # avoid import cycle

    proj = wfs_projector(tensor_rep(mu, nu), lam)
    d = irrep_dimension(lam)
    m, rem = divmod(proj.rank, d)
    if rem != 0:
        raise NumericalConsistencyError(
            f"rank {proj.rank} of the {lam} projector is not divisible by d = {d}"
        )
    return m


def kronecker_coefficient(
    mu: Partition, nu: Partition, lam: Partition, route: str = "char"
) -> Multiplicity:
    """Kronecker coefficient m_{mu nu lam}.

    route "char" uses the triple character sum; route "rank" divides the
    isotypic projector rank by d_lam; route "both" computes both and
    requires exact agreement.
    """
    if not mu.n == nu.n == lam.n:
        raise InvalidArgumentError(f"partitions must share n: {mu}, {nu}, {lam}")
    if route == "char":
        return Multiplicity(value=_kronecker_char(mu, nu, lam), route="character-sum")
    if route == "rank":
        return Multiplicity(value=_kronecker_rank(mu, nu, lam), route="projector-rank")
    if route == "both":
        by_char = _kronecker_char(mu, nu, lam)
        by_rank = _kronecker_rank(mu, nu, lam)
        if by_char != by_rank:
            raise NumericalConsistencyError(
                f"kronecker routes disagree for ({mu};{nu};{lam}): "
                f"character-sum {by_char}, projector-rank {by_rank}"
            )
        return Multiplicity(value=by_char, route="character-sum")
    raise InvalidArgumentError(f"unknown route {route!r}")


def is_positive(mu: Partition, nu: Partition, lam: Partition) -> bool:
    return kronecker_coefficient(mu, nu, lam).value > 0
