"""Kronecker coefficients against an independent brute-force oracle (full
group sums of matrix traces, no shared character cache) and classical
identities.
"""

import math

import numpy as np
import pytest

from snverify.errors import InvalidArgumentError, NumericalConsistencyError
from snverify.kronecker import (
    Multiplicity,
    is_positive,
    kronecker_coefficient,
    multiplicity_character,
)
from snverify.symgroup import Partition, enumerate_group, enumerate_partitions, irrep_dimension
from snverify.yyrep import irrep, rep_evaluate, tensor_rep

P = Partition.parse


def oracle_kronecker(mu, nu, lam):
    """(1/|G|) sum over every group element of the product of traces,
    computed directly from the representation matrices."""
    group = enumerate_group(mu.n)
    total = 0.0
    for g in group:
        total += (
            np.trace(rep_evaluate(irrep(lam), g)).real
            * np.trace(rep_evaluate(irrep(mu), g)).real
            * np.trace(rep_evaluate(irrep(nu), g)).real
        )
    value = total / len(group)
    assert abs(value - round(value)) < 1e-8
    return round(value)


def conjugate_partition(p: Partition) -> Partition:
    parts = p.parts
    return Partition(tuple(sum(1 for q in parts if q > r) for r in range(parts[0])))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_both_routes_match_brute_force_oracle(n):
    shapes = enumerate_partitions(n)
    for mu in shapes:
        for nu in shapes:
            for lam in shapes:
                expected = oracle_kronecker(mu, nu, lam)
                assert kronecker_coefficient(mu, nu, lam, route="char").value == expected
                assert kronecker_coefficient(mu, nu, lam, route="rank").value == expected
                both = kronecker_coefficient(mu, nu, lam, route="both")
                assert both.value == expected


def test_frozen_small_values():
    assert kronecker_coefficient(P("2,1"), P("2,1"), P("2,1")).value == 1
    assert kronecker_coefficient(P("2,1"), P("2,1"), P("3")).value == 1
    assert kronecker_coefficient(P("2,1"), P("2,1"), P("1,1,1")).value == 1
    assert kronecker_coefficient(P("3"), P("2,1"), P("3")).value == 0
    assert kronecker_coefficient(P("3,1"), P("3,1"), P("3,1")).value == 1
    assert kronecker_coefficient(P("3,1"), P("3,1"), P("2,1,1")).value == 1
    assert kronecker_coefficient(P("2,2"), P("2,2"), P("3,1")).value == 0
    assert kronecker_coefficient(P("2,2"), P("2,2"), P("2,2")).value == 1


def test_fully_symmetric_in_all_three_arguments():
    shapes = enumerate_partitions(4)
    import itertools

    for mu, nu, lam in itertools.combinations(shapes, 3):
        values = {
            kronecker_coefficient(a, b, c).value
            for a, b, c in itertools.permutations((mu, nu, lam))
        }
        assert len(values) == 1


def test_trivial_label_gives_delta():
    for n in (3, 4):
        shapes = enumerate_partitions(n)
        triv = Partition((n,))
        for mu in shapes:
            for nu in shapes:
                expected = 1 if mu == nu else 0
                assert kronecker_coefficient(mu, nu, triv).value == expected


def test_alternating_label_gives_conjugate_delta():
    for n in (3, 4):
        shapes = enumerate_partitions(n)
        sign = Partition((1,) * n)
        for mu in shapes:
            for nu in shapes:
                expected = 1 if conjugate_partition(mu) == nu else 0
                assert kronecker_coefficient(mu, nu, sign).value == expected


def test_dimension_sum_identity():
    for n in (3, 4, 5):
        shapes = enumerate_partitions(n)
        for mu in shapes:
            for nu in shapes:
                total = sum(
                    kronecker_coefficient(mu, nu, lam).value * irrep_dimension(lam)
                    for lam in shapes
                )
                assert total == irrep_dimension(mu) * irrep_dimension(nu)


def test_multiplicity_character_on_tensor_rep():
    sigma = tensor_rep(P("2,1"), P("2,1"))
    for lam in enumerate_partitions(3):
        m = multiplicity_character(sigma, lam)
        assert m.value == kronecker_coefficient(P("2,1"), P("2,1"), lam).value
        assert m.route == "character-sum"


def test_is_positive():
    assert is_positive(P("2,1"), P("2,1"), P("2,1"))
    assert not is_positive(P("3"), P("3"), P("2,1"))


def test_negative_multiplicity_rejected():
    with pytest.raises(NumericalConsistencyError):
        Multiplicity(value=-1, route="character-sum")


def test_mismatched_degrees_rejected():
    with pytest.raises(InvalidArgumentError):
        kronecker_coefficient(P("2,1"), P("2,1"), P("3,1"))
    with pytest.raises(InvalidArgumentError):
        kronecker_coefficient(P("2,1"), P("2,1"), P("2,1"), route="nope")
