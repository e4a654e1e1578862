"""gradedrings: exact computational algebra for group-graded rings.

A finite-dimensional ring graded by a finitely generated abelian group and
carrying a family of positive-semidefinite inner products is modeled with
exact rational (or Gaussian rational) arithmetic.  The package validates
the axioms, partitions the support into connection classes with verifiable
path certificates, builds the graded ideal attached to each class, checks
the covering and orthogonality statements, and decides graded simplicity
both through the structure-theorem characterization and through a
brute-force ideal oracle.
"""

from .connections import (
    ConnectionClasses,
    ConnectionPath,
    connected,
    connection_classes,
    is_symmetric_support,
    verify_certificate,
)
from .decomposition import (
    IdealDecomposition,
    class_component_sum,
    class_ideal,
    class_identity_span,
    decompose,
    identity_complement,
    identity_products_span,
    is_graded_ideal,
)
from .errors import (
    GradedRingsError,
    MalformedInputError,
    PreconditionError,
    SpecFileError,
    TheoremViolationError,
)
from .generators import (
    BandedRingParams,
    RandomRingParams,
    banded_ring,
    direct_sum,
    first_primes,
    group_algebra,
    random_ring,
)
from .groups import GroupSignature
from .linalg import (
    EchelonBasis,
    Scalar,
    Subspace,
    full_space,
    joint_orthogonal_complement,
    nullspace,
    pairing,
    psd_check,
    psd_counterexample,
    span,
    unit_vector,
    vector,
    zero_vector,
)
from .properties import (
    CoherenceReport,
    OracleResult,
    PropertyReport,
    annihilator,
    graded_simple_oracle,
    graded_simple_theorem,
    ideal_closure,
    induced_subring,
    is_coherent,
    is_maximal_length,
    is_support_multiplicative,
    properties_report,
    theorem_hypotheses,
)
from .ring import GradedRing, Violation, ViolationReport
from .specfile import dumps_ring, load_ring, loads_ring, ring_from_dict, ring_to_dict, save_ring

__version__ = "0.1.0"

__all__ = [
    "BandedRingParams",
    "CoherenceReport",
    "ConnectionClasses",
    "ConnectionPath",
    "EchelonBasis",
    "GradedRing",
    "GradedRingsError",
    "GroupSignature",
    "IdealDecomposition",
    "MalformedInputError",
    "OracleResult",
    "PreconditionError",
    "PropertyReport",
    "RandomRingParams",
    "Scalar",
    "SpecFileError",
    "Subspace",
    "TheoremViolationError",
    "Violation",
    "ViolationReport",
    "annihilator",
    "banded_ring",
    "class_component_sum",
    "class_ideal",
    "class_identity_span",
    "connected",
    "connection_classes",
    "decompose",
    "direct_sum",
    "dumps_ring",
    "first_primes",
    "full_space",
    "graded_simple_oracle",
    "graded_simple_theorem",
    "group_algebra",
    "ideal_closure",
    "identity_complement",
    "identity_products_span",
    "induced_subring",
    "is_coherent",
    "is_graded_ideal",
    "is_maximal_length",
    "is_support_multiplicative",
    "is_symmetric_support",
    "joint_orthogonal_complement",
    "load_ring",
    "loads_ring",
    "nullspace",
    "pairing",
    "properties_report",
    "psd_check",
    "psd_counterexample",
    "random_ring",
    "ring_from_dict",
    "ring_to_dict",
    "save_ring",
    "span",
    "theorem_hypotheses",
    "unit_vector",
    "vector",
    "verify_certificate",
    "zero_vector",
]
