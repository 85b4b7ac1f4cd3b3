"""Young-Yamanouchi irrep matrices, characters, tensor/regular
representations, and the dense group Fourier transform for S_n.

A GroupRep holds generator images for the adjacent transpositions
sigma_1..sigma_{n-1}; arbitrary elements are evaluated by composing the
images along an adjacent-transposition decomposition.  Group sums are
accumulated with compensated (Kahan) summation in the fixed element order
of symgroup.enumerate_group, so results are byte-reproducible.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import InvalidArgumentError, ResourceLimitError
from .symgroup import (
    Partition,
    Permutation,
    adjacent_transposition_decomposition,
    axial_distance,
    class_representative,
    compose,
    conjugacy_class_of,
    enumerate_group,
    enumerate_partitions,
    enumerate_tableaux,
    group_index,
    inverse,
    irrep_dimension,
)

DENSE_CAP_ENV = "SNVERIFY_DENSE_CAP"
DEFAULT_DENSE_CAP = 6

ATOL = 1e-9  # default entrywise tolerance for floating comparisons


def dense_cap() -> int:
    """Maximum n for dense |G| x |G| objects; overridable via environment."""
    raw = os.environ.get(DENSE_CAP_ENV)
    if raw is None:
        return DEFAULT_DENSE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentError(f"{DENSE_CAP_ENV} must be an integer, got {raw!r}") from None


def check_dense_cap(n: int, what: str) -> None:
    cap = dense_cap()
    if n > cap:
        raise ResourceLimitError(
            f"{what} for S_{n} needs dense {math.factorial(n)} x {math.factorial(n)} "
            f"storage (|G| = n!); capped at n <= {cap} "
            f"(override with {DENSE_CAP_ENV})"
        )


def kahan_sum(terms) -> np.ndarray:
    """Compensated sum of equally-shaped complex arrays, in iteration order."""
    it = iter(terms)
    try:
        first = next(it)
    except StopIteration:
        raise InvalidArgumentError("kahan_sum needs at least one term") from None
    total = np.array(first, dtype=complex)
    comp = np.zeros_like(total)
    for term in it:
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
    return total


@dataclass(eq=False)
class GroupRep:
    """A representation of S_n given by its generator images.

    kind is one of "irrep", "tensor", "left-regular", "right-regular",
    "lift", "conjugate", "identity-times-irrep"; labels carries the
    partition labels where applicable.  base points at the underlying rep
    for "lift"/"conjugate".
    """

    n: int
    dim: int
    kind: str
    generator_images: tuple[np.ndarray, ...]
    labels: tuple[Partition, ...] = ()
    base: "GroupRep | None" = None
    lift_dim: int = 0
    _eval_cache: dict = field(default_factory=dict, repr=False)
    _char_cache: dict = field(default_factory=dict, repr=False)
    _povm_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for img in self.generator_images:
            img.setflags(write=False)


def yy_generator_matrix(shape: Partition, i: int) -> np.ndarray:
    """Orthogonal Young-Yamanouchi matrix for the adjacent transposition
    sigma_i in the irrep labeled by shape.

    In the canonical tableau order, the column for tableau k has 1/tau at k
    and sqrt(1 - 1/tau^2) at the tableau obtained by swapping i and i+1,
    when that swap is standard; tau is the axial distance of i in k.
    """
    tableaux = enumerate_tableaux(shape)
    if not 1 <= i <= shape.n - 1:
        raise InvalidArgumentError(f"generator index {i} out of range for S_{shape.n}")
    index = {t.rows: k for k, t in enumerate(tableaux)}
    d = len(tableaux)
    mat = np.zeros((d, d), dtype=complex)
    for k, t in enumerate(tableaux):
        tau = axial_distance(t, i)
        mat[k, k] = 1.0 / tau
        swapped = t.swap(i)
        if swapped is not None:
            mat[index[swapped.rows], k] = math.sqrt(1.0 - 1.0 / tau**2)
    return mat


@lru_cache(maxsize=None)
def irrep(shape: Partition) -> GroupRep:
    """The Young-Yamanouchi irrep labeled by a partition."""
    n = shape.n
    images = tuple(yy_generator_matrix(shape, i) for i in range(1, n))
    return GroupRep(n=n, dim=irrep_dimension(shape), kind="irrep",
                    generator_images=images, labels=(shape,))


def tensor_rep(mu: Partition, nu: Partition) -> GroupRep:
    """rho^mu tensor rho^nu, generator-wise Kronecker products."""
    if mu.n != nu.n:
        raise InvalidArgumentError(f"degree mismatch: {mu} vs {nu}")
    a, b = irrep(mu), irrep(nu)
    images = tuple(np.kron(x, y) for x, y in zip(a.generator_images, b.generator_images))
    return GroupRep(n=mu.n, dim=a.dim * b.dim, kind="tensor",
                    generator_images=images, labels=(mu, nu))


def lift_with_identity(rep: GroupRep, d2: int) -> GroupRep:
    """sigma tensor I_{d2}: the same action on a doubled register pair."""
    if d2 < 1:
        raise InvalidArgumentError(f"lift dimension must be positive, got {d2}")
    images = tuple(np.kron(img, np.eye(d2, dtype=complex)) for img in rep.generator_images)
    return GroupRep(n=rep.n, dim=rep.dim * d2, kind="lift",
                    generator_images=images, labels=rep.labels, base=rep, lift_dim=d2)


def conjugate_rep(rep: GroupRep) -> GroupRep:
    """Entrywise complex conjugate of a representation."""
    images = tuple(np.conj(img) for img in rep.generator_images)
    return GroupRep(n=rep.n, dim=rep.dim, kind="conjugate",
                    generator_images=images, labels=rep.labels, base=rep)


def identity_times_irrep(m: int, shape: Partition) -> GroupRep:
    """I_m tensor rho^shape: the block-repeated irrep used by the internal
    state test characterization."""
    if m < 1:
        raise InvalidArgumentError(f"multiplicity must be positive, got {m}")
    base = irrep(shape)
    images = tuple(np.kron(np.eye(m, dtype=complex), img) for img in base.generator_images)
    return GroupRep(n=shape.n, dim=m * base.dim, kind="identity-times-irrep",
                    generator_images=images, labels=(shape,), base=base, lift_dim=m)


def regular_representations(n: int) -> tuple[GroupRep, GroupRep]:
    """Left- and right-regular representations on C^{|G|}.

    rho_L(h)|g> = |hg>.  The right action is implemented as
    rho_R(h)|g> = |g h^{-1}> so that both are homomorphisms and commute.
    """
    check_dense_cap(n, "regular representation")
    group = enumerate_group(n)
    size = len(group)

    def perm_matrix(target_index) -> np.ndarray:
        mat = np.zeros((size, size), dtype=complex)
        for col, g in enumerate(group):
            mat[target_index(g), col] = 1.0
        return mat

    left_images = []
    right_images = []
    for i in range(1, n):
        s = Permutation.transposition(n, i)
        left_images.append(perm_matrix(lambda g, s=s: group_index(compose(s, g))))
        right_images.append(perm_matrix(lambda g, s=s: group_index(compose(g, inverse(s)))))
    left = GroupRep(n=n, dim=size, kind="left-regular",
                    generator_images=tuple(left_images))
    right = GroupRep(n=n, dim=size, kind="right-regular",
                     generator_images=tuple(right_images))
    return left, right


def rep_evaluate(rep: GroupRep, g: Permutation) -> np.ndarray:
    """Matrix of g, as the product of generator images along an
    adjacent-transposition decomposition.  Cached per element."""
    if g.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: permutation of S_{g.n}, rep of S_{rep.n}")
    cached = rep._eval_cache.get(g.images)
    if cached is not None:
        return cached
    mat = np.eye(rep.dim, dtype=complex)
    for i in adjacent_transposition_decomposition(g):
        mat = mat @ rep.generator_images[i - 1]
    mat.setflags(write=False)
    rep._eval_cache[g.images] = mat
    return mat


@lru_cache(maxsize=None)
def irrep_character(shape: Partition, cycle_type: Partition) -> float:
    """Character of the irrep at a conjugacy class, via the trace of the
    Young-Yamanouchi matrix at the canonical class representative."""
    value = np.trace(rep_evaluate(irrep(shape), class_representative(cycle_type)))
    return float(value.real)


def character(rep: GroupRep, g: Permutation) -> complex:
    """Trace of rep at g; a class function, cached per cycle type."""
    if g.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: permutation of S_{g.n}, rep of S_{rep.n}")
    cycle_type = conjugacy_class_of(g)
    cached = rep._char_cache.get(cycle_type)
    if cached is not None:
        return cached
    if rep.kind == "irrep":
        value = complex(irrep_character(rep.labels[0], cycle_type))
    elif rep.kind == "tensor":
        mu, nu = rep.labels
        value = complex(irrep_character(mu, cycle_type) * irrep_character(nu, cycle_type))
    elif rep.kind == "lift":
        value = rep.lift_dim * character(rep.base, g)
    elif rep.kind == "identity-times-irrep":
        value = rep.lift_dim * complex(irrep_character(rep.labels[0], cycle_type))
    elif rep.kind == "conjugate":
        value = complex(np.conj(character(rep.base, g)))
    else:
        value = complex(np.trace(rep_evaluate(rep, class_representative(cycle_type))))
    rep._char_cache[cycle_type] = value
    return value


def ft_row_order(n: int) -> list[tuple[Partition, int, int]]:
    """Row index order of the Fourier matrix: partitions in
    reverse-lexicographic order, then (i, j) row-major."""
    order = []
    for shape in enumerate_partitions(n):
        d = irrep_dimension(shape)
        for i in range(d):
            for j in range(d):
                order.append((shape, i, j))
    return order


@lru_cache(maxsize=None)
def fourier_transform_matrix(n: int) -> np.ndarray:
    """Dense |G| x |G| Fourier transform: entry sqrt(d/|G|) rho^lambda_ij(pi)
    at row (lambda, i, j) and column pi."""
    check_dense_cap(n, "Fourier transform")
    group = enumerate_group(n)
    size = len(group)
    ft = np.zeros((size, size), dtype=complex)
    row = 0
    for shape in enumerate_partitions(n):
        rep = irrep(shape)
        d = rep.dim
        scale = math.sqrt(d / size)
        for col, g in enumerate(group):
            block = rep_evaluate(rep, g)
            ft[row : row + d * d, col] = scale * block.reshape(-1)
        row += d * d
    ft.setflags(write=False)
    return ft
