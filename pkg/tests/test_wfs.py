"""Weak Fourier sampling: projector algebra, the phase-estimation Kraus
identity, seeded measurements, and the irrep sampling distribution.
"""

import math

import numpy as np
import pytest

from snverify.entangled import phi_plus
from snverify.errors import InvalidArgumentError, NumericalConsistencyError
from snverify.symgroup import Partition, enumerate_partitions, irrep_dimension
from snverify.wfs import (
    Projector,
    gpe_kraus,
    lightning_distribution,
    measure_wfs,
    wfs_povm,
    wfs_projector,
)
from snverify.yyrep import irrep, lift_with_identity, regular_representations, tensor_rep

P = Partition.parse


def all_tensor_pairs(n):
    shapes = enumerate_partitions(n)
    return [(mu, nu) for mu in shapes for nu in shapes]


# ---------------------------------------------------------------- projectors

@pytest.mark.parametrize("n", [3, 4])
def test_povm_elements_are_orthogonal_projectors_summing_to_identity(n):
    for mu, nu in all_tensor_pairs(n):
        sigma = tensor_rep(mu, nu)
        povm = wfs_povm(sigma)
        total = np.zeros((sigma.dim, sigma.dim), dtype=complex)
        mats = [p.matrix for _, p in povm]
        for a, pa in enumerate(mats):
            np.testing.assert_allclose(pa, pa.conj().T, atol=1e-10)
            np.testing.assert_allclose(pa @ pa, pa, atol=1e-10)
            for pb in mats[a + 1 :]:
                np.testing.assert_allclose(pa @ pb, np.zeros_like(pa), atol=1e-10)
            total += pa
        np.testing.assert_allclose(total, np.eye(sigma.dim), atol=1e-10)


def test_projector_on_plain_irrep_is_identity_or_zero():
    # An irrep is its own single isotypic component.
    rep = irrep(P("2,1"))
    same = wfs_projector(rep, P("2,1"))
    np.testing.assert_allclose(same.matrix, np.eye(2), atol=1e-10)
    assert same.rank == 2
    other = wfs_projector(rep, P("3"))
    np.testing.assert_allclose(other.matrix, np.zeros((2, 2)), atol=1e-10)
    assert other.rank == 0


def test_projector_ranks_on_regular_representation():
    # The regular representation contains every irrep with multiplicity
    # equal to its dimension, so each isotypic rank is d^2.
    left, _ = regular_representations(4)
    for shape in enumerate_partitions(4):
        proj = wfs_projector(left, shape)
        assert proj.rank == irrep_dimension(shape) ** 2


def test_lifted_projector_factors():
    sigma = tensor_rep(P("2,1"), P("2,1"))
    lifted = lift_with_identity(sigma, sigma.dim)
    for shape in enumerate_partitions(3):
        base = wfs_projector(sigma, shape)
        big = wfs_projector(lifted, shape)
        np.testing.assert_allclose(
            big.matrix, np.kron(base.matrix, np.eye(sigma.dim)), atol=1e-10
        )
        assert big.rank == base.rank * sigma.dim


def test_projector_rejects_non_integral_trace():
    with pytest.raises(NumericalConsistencyError):
        Projector.from_matrix(np.diag([0.5, 0.5, 0.3]))


def test_degree_mismatch_rejected():
    with pytest.raises(InvalidArgumentError):
        wfs_projector(irrep(P("2,1")), P("3,1"))


# -------------------------------------------------------------------- Kraus

@pytest.mark.parametrize(
    "mu,nu",
    [("2,1", "2,1"), ("2,1", "1,1,1"), ("3", "3"), ("3,1", "2,2"), ("2,1,1", "2,1,1")],
)
def test_kraus_element_squares_to_projector(mu, nu):
    sigma = tensor_rep(P(mu), P(nu))
    for shape in enumerate_partitions(sigma.n):
        kraus = gpe_kraus(sigma, shape)
        xi = wfs_projector(sigma, shape)
        np.testing.assert_allclose(kraus.matrix.conj().T @ kraus.matrix, xi.matrix, atol=1e-8)


def test_kraus_channel_is_trace_preserving():
    sigma = tensor_rep(P("2,1"), P("2,1"))
    total = sum(
        gpe_kraus(sigma, shape).matrix.conj().T @ gpe_kraus(sigma, shape).matrix
        for shape in enumerate_partitions(3)
    )
    np.testing.assert_allclose(total, np.eye(sigma.dim), atol=1e-8)


# -------------------------------------------------------------- measurement

def test_measure_is_seed_deterministic():
    sigma = tensor_rep(P("2,1"), P("2,1"))
    lifted = lift_with_identity(sigma, sigma.dim)
    psi = phi_plus(sigma.dim).amplitudes
    a_label, a_post = measure_wfs(lifted, psi, seed=5)
    b_label, b_post = measure_wfs(lifted, psi, seed=5)
    assert a_label == b_label
    assert a_post.tobytes() == b_post.tobytes()


def test_measure_post_state_lies_in_measured_component():
    sigma = tensor_rep(P("3,1"), P("3,1"))
    lifted = lift_with_identity(sigma, sigma.dim)
    psi = phi_plus(sigma.dim).amplitudes
    for seed in range(6):
        label, post = measure_wfs(lifted, psi, seed)
        proj = wfs_projector(lifted, label)
        np.testing.assert_allclose(proj.matrix @ post, post, atol=1e-10)
        assert np.linalg.norm(post) == pytest.approx(1.0, abs=1e-10)


def test_measure_frequencies_match_lightning_distribution():
    mu = nu = P("2,1")
    sigma = tensor_rep(mu, nu)
    lifted = lift_with_identity(sigma, sigma.dim)
    psi = phi_plus(sigma.dim).amplitudes
    dist = lightning_distribution(mu, nu)
    counts = {shape: 0 for shape in dist}
    trials = 600
    for seed in range(trials):
        label, _ = measure_wfs(lifted, psi, seed)
        counts[label] += 1
    for shape, prob in dist.items():
        assert counts[shape] / trials == pytest.approx(prob, abs=0.07)


def test_measure_rejects_non_unit_state():
    sigma = tensor_rep(P("2,1"), P("2,1"))
    with pytest.raises(InvalidArgumentError):
        measure_wfs(sigma, np.ones(4), seed=0)


# ---------------------------------------------------------------- lightning

def test_lightning_frozen_for_two_dim_square():
    dist = lightning_distribution(P("2,1"), P("2,1"))
    assert dist[P("3")] == pytest.approx(0.25, abs=1e-12)
    assert dist[P("2,1")] == pytest.approx(0.5, abs=1e-12)
    assert dist[P("1,1,1")] == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_lightning_matches_born_rule_on_max_entangled_state(n):
    for mu, nu in all_tensor_pairs(n):
        sigma = tensor_rep(mu, nu)
        dist = lightning_distribution(mu, nu)
        assert sum(dist.values()) == pytest.approx(1.0, abs=1e-12)
        for shape, prob in dist.items():
            xi = wfs_projector(sigma, shape)
            born = xi.rank / sigma.dim  # <Phi+|(Xi x I)|Phi+> = tr(Xi)/D
            assert prob == pytest.approx(born, abs=1e-9)


def test_lightning_with_sign_twist_permutes_labels():
    # Tensoring with the alternating irrep transposes each label's
    # conjugate; for n = 3 this swaps the ends and fixes the middle.
    dist = lightning_distribution(P("2,1"), P("1,1,1"))
    assert dist[P("2,1")] == pytest.approx(1.0, abs=1e-12)
