"""Exact computations in the stable module category of finite-dimensional
path algebras of acyclic quivers over prime fields."""

from .errors import (
    AlgebraMismatchError,
    CyclicQuiverError,
    DocumentError,
    DocumentSyntaxError,
    EndpointMismatchError,
    InternalInconsistencyError,
    NonCommutingMorphismError,
    NonPrimeModulusError,
    PreconditionError,
    ShapeError,
    StablemodError,
    TooLargeError,
    UnknownCheckIdError,
)
from .linalg import (
    FieldSpec,
    Matrix,
    Scalar,
    image_basis,
    nullspace_basis,
    quotient_data,
    rank,
    rref,
    solve,
    subspace_contains,
    subspace_equal,
)
from .quiver import (
    Algebra,
    Arrow,
    Path,
    Quiver,
    build_algebra,
    kronecker_quiver,
    linear_quiver,
    named_quiver,
)
from .projectives import (
    injective,
    projective,
    projective_cover,
    radical,
    regular_module,
    simple,
)
from .rep import (
    HomBasis,
    IsoSearchResult,
    Morphism,
    Representation,
    cokernel,
    direct_sum,
    dualize,
    dualize_morphism,
    find_iso,
    hom_basis,
    hom_dim,
    image,
    kernel,
    pushout,
    random_hom,
    zero_representation,
)
from .stability import (
    AlgebraConditionReport,
    CostableReflection,
    HellerWitness,
    StablePartDecomposition,
    SummandSplit,
    UniversalProjectiveArrow,
    condition_report,
    costable_reflection,
    heller_witness,
    is_costable,
    is_stable,
    split_projective_summand,
    stable_part,
    universal_to_projectives,
)
from .stabcat import (
    PHomSpace,
    QCokernelWitness,
    StableIsoResult,
    StableMorphism,
    epi_by_pushout_sections,
    is_stable_epi,
    is_stable_mono,
    phom_basis,
    q_cokernel_preservation_witness,
    stable_cokernel,
    stable_cokernel_pushout,
    stable_eq,
    stable_hom_dim,
    stable_inverse,
    stable_is_zero,
    stable_iso,
    stable_kernel,
    stable_morphism,
)
from .verify import (
    CHECK_IDS,
    CheckReport,
    InstanceSpec,
    bounded_family,
    brute_force_hom_count,
    brute_force_stable_submodule_sum,
    cokernel_universal_check,
    run_suite,
)
from .document import Document, parse, serialize

__version__ = "0.1.0"
