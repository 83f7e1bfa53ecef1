"""Entanglement-assisted quantum MDS codes from cyclic codes over GF(q^2).

Four families of [[n, k, d; c]] codes of length n = (q^2+1)/(m^2+1) are
constructed from consecutive-coset defining sets, with the entanglement
count obtained three independent ways: a closed form, the defining-set
decomposition |Z n (-qZ)|, and the rank of H H† over GF(q^2).
"""

__version__ = "0.1.0"

from .fields import (
    GF,
    Field,
    FieldElement,
    embed,
    find_primitive_element,
    frobenius,
    in_subfield,
    multiplicative_order,
    nth_root_of_unity,
    project,
    quadratic_extension,
)
from .cosets import (
    Coset,
    Decomposition,
    ResidueSet,
    all_cosets,
    coset_neg_q_identity,
    cyclotomic_coset,
    decompose,
    neg_q_image,
    run_defining_set,
)
from .families import (
    EAParams,
    CodeRecord,
    ClosedForm,
    FamilySpec,
    VerificationReport,
    build_T1,
    build_T1_prime,
    build_defining_set,
    closed_form,
    ea_params,
    enumerate_admissible,
    spec_from_q,
    sweep_specs,
    theorem_quantum_dim,
    verify_family,
)
from .cyclic import (
    MatrixGF,
    Polynomial,
    brute_min_distance,
    check_polynomial,
    generator_matrix,
    generator_polynomial,
    minimal_polynomial,
    parity_check_matrix,
    x_pow_minus_one,
)
from .rank_oracle import (
    OracleSizeError,
    RankReport,
    conjugate_transpose,
    entanglement_rank,
    family_generator_polynomial,
    rank_gf,
)
from .verification import SweepSummary, coset_identity_holds, run_verification_sweep
from .published_params import PUBLISHED_ROWS

__all__ = [
    "GF", "Field", "FieldElement", "embed", "find_primitive_element",
    "frobenius", "in_subfield", "multiplicative_order", "nth_root_of_unity",
    "project", "quadratic_extension",
    "Coset", "Decomposition", "ResidueSet", "all_cosets",
    "coset_neg_q_identity", "cyclotomic_coset", "decompose", "neg_q_image",
    "run_defining_set",
    "EAParams", "CodeRecord", "ClosedForm", "FamilySpec",
    "VerificationReport", "build_T1", "build_T1_prime", "build_defining_set",
    "closed_form", "ea_params", "enumerate_admissible", "spec_from_q",
    "sweep_specs", "theorem_quantum_dim", "verify_family",
    "MatrixGF", "Polynomial", "brute_min_distance", "check_polynomial",
    "generator_matrix", "generator_polynomial", "minimal_polynomial",
    "parity_check_matrix", "x_pow_minus_one",
    "OracleSizeError", "RankReport", "conjugate_transpose",
    "entanglement_rank", "family_generator_polynomial", "rank_gf",
    "SweepSummary", "coset_identity_holds", "run_verification_sweep",
    "PUBLISHED_ROWS",
    "__version__",
]
