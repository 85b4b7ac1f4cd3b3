"""Vectorization calculus, maximally entangled states over subspaces, the
post-sampling states on a doubled register, and the span of block-wise
maximally entangled states inside an isotypic component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInputError, InvalidArgumentError
from .symgroup import Partition, enumerate_group, irrep_dimension
from .wfs import wfs_projector
from .yyrep import GroupRep, character, irrep, kahan_sum, rep_evaluate

ORTHO_TOL = 1e-8


@dataclass(frozen=True)
class StateVector:
    """A unit vector with register-dimension metadata."""

    registers: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (self.dim,):
            raise InvalidArgumentError(
                f"amplitude vector of length {amps.shape} does not match registers {self.registers}"
            )
        if abs(np.linalg.norm(amps) - 1.0) > 1e-9:
            raise InvalidArgumentError("state vector must have unit norm")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return math.prod(self.registers)


@dataclass(frozen=True)
class Subspace:
    """A subspace of C^{ambient_dim} given by orthonormal basis columns.
    A zero-column basis is the empty subspace."""

    ambient_dim: int
    basis: np.ndarray

    def __post_init__(self):
        basis = np.asarray(self.basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != self.ambient_dim:
            raise InvalidArgumentError("basis must be ambient_dim x k")
        gram = basis.conj().T @ basis
        if not np.allclose(gram, np.eye(basis.shape[1]), atol=ORTHO_TOL):
            raise InvalidArgumentError("basis columns must be orthonormal")
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector_matrix(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def distance_to(self, psi: np.ndarray) -> float:
        """Exact distance from a vector to this subspace: norm of the
        orthogonal residual."""
        residual = psi - self.basis @ (self.basis.conj().T @ psi)
        return float(np.linalg.norm(residual))


def vec(a: np.ndarray) -> np.ndarray:
    """Row-major vectorization |vec A> = sum_ij A_ij |i>|j> (unnormalized)."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidArgumentError(f"vec expects a square matrix, got shape {a.shape}")
    return a.reshape(-1)


def unvec(v: np.ndarray, d: int) -> np.ndarray:
    """Inverse of vec for a d x d matrix."""
    v = np.asarray(v, dtype=complex)
    if v.shape != (d * d,):
        raise InvalidArgumentError(f"vector of length {v.shape} is not d^2 with d = {d}")
    return v.reshape(d, d)


def vec_state(a: np.ndarray) -> tuple[StateVector, float]:
    """Normalized vectorization plus the Frobenius norm of the input."""
    raw = vec(a)
    norm = float(np.linalg.norm(raw))
    if norm < 1e-12:
        raise DegenerateInputError("cannot normalize the vectorization of a zero matrix")
    d = a.shape[0]
    return StateVector(registers=(d, d), amplitudes=raw / norm), norm


def phi_plus(d: int) -> StateVector:
    """The maximally entangled state vec(I_d)/sqrt(d)."""
    if d < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {d}")
    return StateVector(registers=(d, d), amplitudes=vec(np.eye(d)) / math.sqrt(d))


def orthonormalize(vectors: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Modified Gram-Schmidt with one re-orthogonalization pass; drops
    near-null columns.  Deterministic given column order."""
    cols = []
    for j in range(vectors.shape[1]):
        v = np.array(vectors[:, j], dtype=complex)
        for _ in range(2):
            for u in cols:
                v = v - u * (u.conj() @ v)
        norm = np.linalg.norm(v)
        if norm > tol:
            cols.append(v / norm)
    if not cols:
        return np.zeros((vectors.shape[0], 0), dtype=complex)
    return np.column_stack(cols)


def max_entangled_over(pi: Subspace) -> StateVector:
    """|Phi_Pi> = (1/sqrt d1) sum_i |b_i> tensor |b_i*>; exactly invariant
    under the choice of orthonormal basis."""
    d1 = pi.dim
    if d1 < 1:
        raise InvalidArgumentError("cannot build a maximally entangled state over a zero subspace")
    d2 = pi.ambient_dim
    out = np.zeros(d2 * d2, dtype=complex)
    for i in range(d1):
        b = pi.basis[:, i]
        out += np.kron(b, b.conj())
    return StateVector(registers=(d2, d2), amplitudes=out / math.sqrt(d1))


def psi_lambda(
    rep: GroupRep, shape: Partition, phi: np.ndarray
) -> tuple[StateVector, float]:
    """Post-weak-Fourier-sampling state on a doubled register:
    normalized sum_h chi^shape(h)* (rep(h) tensor I_D) |phi>, together
    with the squared norm of the unnormalized sum."""
    if shape.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: partition of {shape.n}, rep of S_{rep.n}")
    d = rep.dim
    phi = np.asarray(phi, dtype=complex)
    if phi.shape != (d * d,):
        raise InvalidArgumentError(f"phi must live on C^{d * d}, got {phi.shape}")
    phi_mat = unvec(phi, d)
    group = enumerate_group(rep.n)
    total = kahan_sum(
        np.conj(character(irrep(shape), h)) * (rep_evaluate(rep, h) @ phi_mat)
        for h in group
    )
    raw = vec(total)
    norm_sq = float(np.linalg.norm(raw) ** 2)
    if norm_sq < 1e-12:
        raise DegenerateInputError(
            f"phi has no component in the {shape} isotypic subspace"
        )
    return (
        StateVector(registers=(d, d), amplitudes=raw / math.sqrt(norm_sq)),
        norm_sq,
    )


def isotypic_block_basis(rep: GroupRep, shape: Partition) -> list[np.ndarray]:
    """Orthonormal bases of the individual irrep blocks inside the shape
    isotypic component of rep.

    Built from the matrix-unit operators e_ij = (d/|G|) sum_g
    rho^shape_ij(g)* rep(g): eigenvectors of the Hermitian idempotent e_11
    seed each block, and e_i1 transports them along the irrep slots.
    Returns one D x d matrix per block (possibly none); conjugating rep by
    the stacked basis yields I_m tensor rho^shape.
    """
    if shape.n != rep.n:
        raise InvalidArgumentError(f"degree mismatch: partition of {shape.n}, rep of S_{rep.n}")
    lam_rep = irrep(shape)
    d = lam_rep.dim
    group = enumerate_group(rep.n)
    scale = d / len(group)
    units = [
        kahan_sum(
            scale * np.conj(rep_evaluate(lam_rep, g)[i, 0]) * rep_evaluate(rep, g)
            for g in group
        )
        for i in range(d)
    ]
    e11 = units[0]
    evals, evecs = np.linalg.eigh(e11)
    seeds = [evecs[:, k] for k in range(len(evals)) if evals[k] > 0.5]
    blocks = []
    for w in seeds:
        cols = []
        for i in range(d):
            v = units[i] @ w
            cols.append(v / np.linalg.norm(v))
        blocks.append(np.column_stack(cols))
    return blocks


def m_lambda_subspace(rep: GroupRep, shape: Partition, route: str = "span") -> Subspace:
    """Span of the block-wise maximally entangled states of the shape
    isotypic component, inside C^{D^2}.

    route "span" builds one maximally entangled state per irrep block from
    an explicit block decomposition; route "fixed-point" takes the
    eigenvalue-1 eigenspace of the internal-test acceptance action
    restricted to the post-sampling subspace (dimension m^2 in general).
    """
    dd = rep.dim * rep.dim
    if route == "span":
        blocks = isotypic_block_basis(rep, shape)
        if not blocks:
            return Subspace(ambient_dim=dd, basis=np.zeros((dd, 0), dtype=complex))
        d = irrep_dimension(shape)
        cols = [vec(b @ b.conj().T) / math.sqrt(d) for b in blocks]
        return Subspace(ambient_dim=dd, basis=orthonormalize(np.column_stack(cols)))
    if route == "fixed-point":
        from .verifier import commutant_projector  # deferred: verifier imports us

        xi = wfs_projector(rep, shape)
        gamma = np.kron(xi.matrix, np.eye(rep.dim, dtype=complex))
        fixed = gamma @ commutant_projector(rep)
        fixed = (fixed + fixed.conj().T) / 2
        evals, evecs = np.linalg.eigh(fixed)
        keep = [k for k in range(len(evals)) if evals[k] > 0.5]
        if not keep:
            return Subspace(ambient_dim=dd, basis=np.zeros((dd, 0), dtype=complex))
        return Subspace(ambient_dim=dd, basis=orthonormalize(evecs[:, keep]))
    raise InvalidArgumentError(f"unknown route {route!r}")
