"""Representation matrices and the group Fourier transform, checked
against frozen hand-derived matrices, brute-force character sums, and the
defining intertwining identities.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snverify.errors import ResourceLimitError
from snverify.symgroup import (
    Partition,
    Permutation,
    adjacent_transposition_decomposition,
    class_representative,
    compose,
    conjugacy_class_of,
    enumerate_group,
    enumerate_partitions,
    inverse,
    irrep_dimension,
)
from snverify.yyrep import (
    character,
    conjugate_rep,
    fourier_transform_matrix,
    ft_row_order,
    identity_times_irrep,
    irrep,
    irrep_character,
    kahan_sum,
    lift_with_identity,
    regular_representations,
    rep_evaluate,
    tensor_rep,
)

P = Partition.parse

SQ3 = math.sqrt(3.0) / 2.0

# Hand-derived generator matrices for the 2-dimensional irrep of S_3 in
# the canonical tableau order (rows (1,2),(3) before rows (1,3),(2)):
# sigma_1 fixes/negates the two tableaux (axial distances +1 and -1);
# sigma_2 has axial distance -2 on the first tableau and mixes the pair.
S3_GEN_1 = np.array([[1.0, 0.0], [0.0, -1.0]])
S3_GEN_2 = np.array([[-0.5, SQ3], [SQ3, 0.5]])


def test_frozen_generator_matrices_for_two_dim_irrep():
    rep = irrep(P("2,1"))
    np.testing.assert_allclose(rep.generator_images[0], S3_GEN_1, atol=1e-12)
    np.testing.assert_allclose(rep.generator_images[1], S3_GEN_2, atol=1e-12)


def test_frozen_three_cycle_matrix():
    # (1 2 3) = sigma_1 then sigma_2, a rotation by 2*pi/3
    rep = irrep(P("2,1"))
    g = Permutation((2, 3, 1))
    expected = np.array([[-0.5, SQ3], [-SQ3, -0.5]])
    np.testing.assert_allclose(rep_evaluate(rep, g), expected, atol=1e-12)


def test_generator_images_are_orthogonal_involutions():
    for n in range(2, 6):
        for shape in enumerate_partitions(n):
            rep = irrep(shape)
            for img in rep.generator_images:
                np.testing.assert_allclose(img @ img, np.eye(rep.dim), atol=1e-12)
                np.testing.assert_allclose(img, img.T.conj(), atol=1e-12)
                assert np.allclose(img.imag, 0.0)


def test_braid_and_commutation_relations():
    for n in range(3, 6):
        for shape in enumerate_partitions(n):
            imgs = irrep(shape).generator_images
            for i in range(len(imgs) - 1):
                a, b = imgs[i], imgs[i + 1]
                np.testing.assert_allclose(a @ b @ a, b @ a @ b, atol=1e-12)
            for i in range(len(imgs)):
                for j in range(i + 2, len(imgs)):
                    np.testing.assert_allclose(
                        imgs[i] @ imgs[j], imgs[j] @ imgs[i], atol=1e-12
                    )


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_evaluation_is_a_homomorphism(data):
    n = data.draw(st.integers(min_value=2, max_value=5))
    shape = data.draw(st.sampled_from(enumerate_partitions(n)))
    draw = lambda: Permutation(tuple(data.draw(st.permutations(list(range(1, n + 1))))))
    g, h = draw(), draw()
    rep = irrep(shape)
    np.testing.assert_allclose(
        rep_evaluate(rep, g) @ rep_evaluate(rep, h),
        rep_evaluate(rep, compose(g, h)),
        atol=1e-10,
    )


def test_evaluation_is_decomposition_independent():
    # Multiplying generator images along the alternate decomposition must
    # reproduce the cached bubble-sort evaluation.
    for n in (3, 4):
        for shape in enumerate_partitions(n):
            rep = irrep(shape)
            for g in enumerate_group(n):
                alt = np.eye(rep.dim, dtype=complex)
                for i in adjacent_transposition_decomposition(g, "insertion"):
                    alt = alt @ rep.generator_images[i - 1]
                np.testing.assert_allclose(alt, rep_evaluate(rep, g), atol=1e-12)


def test_inverse_evaluates_to_transpose():
    for shape in enumerate_partitions(4):
        rep = irrep(shape)
        for g in enumerate_group(4):
            np.testing.assert_allclose(
                rep_evaluate(rep, inverse(g)), rep_evaluate(rep, g).T.conj(), atol=1e-12
            )


# --------------------------------------------------------------- characters

# Character table of S_3: rows are shapes in canonical order, columns are
# cycle types (1,1,1), (2,1), (3) — hand-computed.
S3_CHAR_TABLE = {
    ("3",): {"1,1,1": 1, "2,1": 1, "3": 1},
    ("2,1",): {"1,1,1": 2, "2,1": 0, "3": -1},
    ("1,1,1",): {"1,1,1": 1, "2,1": -1, "3": 1},
}

# Character table of S_4, hand-computed via Frobenius / standard tables.
S4_CHAR_TABLE = {
    ("4",): {"1,1,1,1": 1, "2,1,1": 1, "2,2": 1, "3,1": 1, "4": 1},
    ("3,1",): {"1,1,1,1": 3, "2,1,1": 1, "2,2": -1, "3,1": 0, "4": -1},
    ("2,2",): {"1,1,1,1": 2, "2,1,1": 0, "2,2": 2, "3,1": -1, "4": 0},
    ("2,1,1",): {"1,1,1,1": 3, "2,1,1": -1, "2,2": -1, "3,1": 0, "4": 1},
    ("1,1,1,1",): {"1,1,1,1": 1, "2,1,1": -1, "2,2": 1, "3,1": 1, "4": -1},
}


@pytest.mark.parametrize("table", [S3_CHAR_TABLE, S4_CHAR_TABLE])
def test_character_tables(table):
    for (shape_text,), row in table.items():
        shape = P(shape_text)
        for cycle_text, value in row.items():
            assert irrep_character(shape, P(cycle_text)) == pytest.approx(value, abs=1e-10)


def test_character_is_a_class_function():
    for shape in enumerate_partitions(4):
        rep = irrep(shape)
        for g in enumerate_group(4):
            by_class = irrep_character(shape, conjugacy_class_of(g))
            assert character(rep, g) == pytest.approx(by_class, abs=1e-10)
            assert np.trace(rep_evaluate(rep, g)) == pytest.approx(by_class, abs=1e-10)


def test_character_orthogonality_rows():
    for n in range(2, 6):
        shapes = enumerate_partitions(n)
        size = math.factorial(n)
        for a in shapes:
            for b in shapes:
                total = sum(
                    sum(1 for g in enumerate_group(n) if conjugacy_class_of(g) == ct)
                    * irrep_character(a, ct)
                    * irrep_character(b, ct)
                    for ct in shapes
                )
                assert total / size == pytest.approx(1.0 if a == b else 0.0, abs=1e-9)


def test_derived_representation_characters():
    mu, nu = P("2,1"), P("2,1")
    sigma = tensor_rep(mu, nu)
    lifted = lift_with_identity(sigma, 3)
    conj = conjugate_rep(sigma)
    blocked = identity_times_irrep(2, mu)
    for g in enumerate_group(3):
        chi_mu = irrep_character(mu, conjugacy_class_of(g))
        assert character(sigma, g) == pytest.approx(chi_mu * chi_mu, abs=1e-10)
        assert character(lifted, g) == pytest.approx(3 * chi_mu * chi_mu, abs=1e-10)
        assert character(conj, g) == pytest.approx(chi_mu * chi_mu, abs=1e-10)
        assert character(blocked, g) == pytest.approx(2 * chi_mu, abs=1e-10)
        np.testing.assert_allclose(
            rep_evaluate(blocked, g),
            np.kron(np.eye(2), rep_evaluate(irrep(mu), g)),
            atol=1e-12,
        )


# --------------------------------------------------- regular representations

def test_regular_representations_act_correctly():
    left, right = regular_representations(3)
    group = enumerate_group(3)
    for h in group:
        lh = rep_evaluate(left, h)
        rh = rep_evaluate(right, h)
        for col, g in enumerate(group):
            assert lh[:, col].argmax() == group.index(compose(h, g))
            assert rh[:, col].argmax() == group.index(compose(g, inverse(h)))
        # the two actions commute
        for h2 in group:
            np.testing.assert_allclose(
                lh @ rep_evaluate(right, h2), rep_evaluate(right, h2) @ lh, atol=1e-12
            )


def test_regular_character_is_group_order_at_identity_only():
    left, _ = regular_representations(4)
    for g in enumerate_group(4):
        expected = 24.0 if g == Permutation.identity(4) else 0.0
        assert character(left, g) == pytest.approx(expected, abs=1e-9)


# --------------------------------------------------------- Fourier transform

@pytest.mark.parametrize("n", [2, 3, 4])
def test_fourier_transform_is_unitary(n):
    ft = fourier_transform_matrix(n)
    size = math.factorial(n)
    np.testing.assert_allclose(ft @ ft.conj().T, np.eye(size), atol=1e-10)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fourier_transform_block_diagonalizes_regular_reps(n):
    ft = fourier_transform_matrix(n)
    left, right = regular_representations(n)
    for h in enumerate_group(n):
        left_hat = ft @ rep_evaluate(left, h) @ ft.conj().T
        right_hat = ft @ rep_evaluate(right, h) @ ft.conj().T
        row = 0
        for shape in enumerate_partitions(n):
            d = irrep_dimension(shape)
            block = rep_evaluate(irrep(shape), h)
            sl = slice(row, row + d * d)
            np.testing.assert_allclose(
                left_hat[sl, sl], np.kron(block, np.eye(d)), atol=1e-10
            )
            np.testing.assert_allclose(
                right_hat[sl, sl], np.kron(np.eye(d), block.conj()), atol=1e-10
            )
            row += d * d
        # off-diagonal blocks vanish
        mask = np.ones_like(left_hat, dtype=bool)
        row = 0
        for shape in enumerate_partitions(n):
            d = irrep_dimension(shape)
            mask[row : row + d * d, row : row + d * d] = False
            row += d * d
        assert np.abs(left_hat[mask]).max() < 1e-10
        assert np.abs(right_hat[mask]).max() < 1e-10


def test_ft_row_order_matches_matrix_entries():
    n = 3
    ft = fourier_transform_matrix(n)
    group = enumerate_group(n)
    size = len(group)
    for r, (shape, i, j) in enumerate(ft_row_order(n)):
        rep = irrep(shape)
        scale = math.sqrt(rep.dim / size)
        for col, g in enumerate(group):
            assert ft[r, col] == pytest.approx(scale * rep_evaluate(rep, g)[i, j], abs=1e-12)


def test_fourier_transform_respects_dense_cap(monkeypatch):
    monkeypatch.setenv("SNVERIFY_DENSE_CAP", "3")
    fourier_transform_matrix.cache_clear()
    try:
        with pytest.raises(ResourceLimitError):
            fourier_transform_matrix(4)
    finally:
        fourier_transform_matrix.cache_clear()


# ------------------------------------------------------------------- kahan

def test_kahan_sum_matches_plain_sum_on_small_input():
    rng = np.random.default_rng(0)
    terms = [rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)) for _ in range(50)]
    np.testing.assert_allclose(kahan_sum(iter(terms)), sum(terms), atol=1e-12)


def test_kahan_sum_is_reproducible():
    rng = np.random.default_rng(1)
    terms = [rng.standard_normal(5) * 10.0**k for k in range(-8, 8) for _ in range(3)]
    a = kahan_sum(iter(terms))
    b = kahan_sum(iter(terms))
    assert a.tobytes() == b.tobytes()
