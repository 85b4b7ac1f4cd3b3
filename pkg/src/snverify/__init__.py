"""Exact desk-scale toolkit for symmetric-group representation theory and
entanglement verification: Young's orthogonal irreps, the group Fourier
transform, weak Fourier sampling, Kronecker coefficients, maximally
entangled subspace states, and the two-step verification algorithm with
numerically certified robustness bounds.
"""

from .errors import (
    DegenerateInputError,
    InvalidArgumentError,
    NumericalConsistencyError,
    ResourceLimitError,
    SnverifyError,
)
from .symgroup import (
    Partition,
    Permutation,
    StandardTableau,
    adjacent_transposition_decomposition,
    class_size,
    compose,
    conjugacy_class_of,
    enumerate_group,
    enumerate_partitions,
    enumerate_tableaux,
    inverse,
    irrep_dimension,
)
from .yyrep import (
    GroupRep,
    character,
    fourier_transform_matrix,
    identity_times_irrep,
    irrep,
    irrep_character,
    kahan_sum,
    lift_with_identity,
    regular_representations,
    rep_evaluate,
    tensor_rep,
)
from .wfs import (
    KrausElement,
    Projector,
    gpe_kraus,
    lightning_distribution,
    measure_wfs,
    wfs_povm,
    wfs_projector,
)
from .kronecker import Multiplicity, is_positive, kronecker_coefficient
from .entangled import (
    StateVector,
    Subspace,
    isotypic_block_basis,
    m_lambda_subspace,
    max_entangled_over,
    phi_plus,
    psi_lambda,
    unvec,
    vec,
)
from .verifier import (
    AcceptanceOperator,
    CertificationTrial,
    TestReport,
    certify_corollary_bound,
    certify_lemma_bound,
    channel_E,
    commutant_projector,
    internal_test_probability,
    run_verifier_sampled,
    verification_acceptance_operator,
)
from .selftest import run_selftest

__version__ = "0.1.0"

__all__ = [
    "AcceptanceOperator",
    "CertificationTrial",
    "DegenerateInputError",
    "GroupRep",
    "InvalidArgumentError",
    "KrausElement",
    "Multiplicity",
    "NumericalConsistencyError",
    "Partition",
    "Permutation",
    "Projector",
    "ResourceLimitError",
    "SnverifyError",
    "StandardTableau",
    "StateVector",
    "Subspace",
    "TestReport",
    "adjacent_transposition_decomposition",
    "certify_corollary_bound",
    "certify_lemma_bound",
    "channel_E",
    "character",
    "class_size",
    "commutant_projector",
    "compose",
    "conjugacy_class_of",
    "enumerate_group",
    "enumerate_partitions",
    "enumerate_tableaux",
    "fourier_transform_matrix",
    "gpe_kraus",
    "identity_times_irrep",
    "internal_test_probability",
    "inverse",
    "irrep",
    "irrep_character",
    "irrep_dimension",
    "is_positive",
    "isotypic_block_basis",
    "kahan_sum",
    "kronecker_coefficient",
    "lift_with_identity",
    "lightning_distribution",
    "m_lambda_subspace",
    "max_entangled_over",
    "measure_wfs",
    "phi_plus",
    "psi_lambda",
    "regular_representations",
    "rep_evaluate",
    "run_selftest",
    "run_verifier_sampled",
    "tensor_rep",
    "unvec",
    "vec",
    "verification_acceptance_operator",
    "wfs_povm",
    "wfs_projector",
]
