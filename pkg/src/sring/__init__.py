"""Workbench for S-element structure in finite commutative rings.

Rings are dense Cayley tables over a carrier 0..n-1; subsets travel as
bitmasks.  The high-level entry points are :func:`classify`,
:func:`element_sets`, :func:`localize`, and the corpus-wide
:func:`run_verification`.
"""

from .bits import bit, full_mask, mask_of, members, popcount
from .classify import (
    ClassificationReport,
    UniformFlag,
    boolean_decomposition_check,
    classify,
    max_relative_check,
    reduced_equivalences_check,
    s_field_equivalence_check,
    zero_divisor_idempotent_check,
)
from .elements import (
    ElementSets,
    SElementSets,
    WeakInverse,
    Witness,
    WitnessKind,
    element_sets,
    inclusion_chain_check,
    multiplicative_closure_check,
    sum_closure_status,
    torsion_intersection_check,
    vnr_characterization_check,
    weak_inverse,
    weakly_reduced_consequence_check,
    witness_for,
)
from .errors import (
    DegenerateSetError,
    EnumerationCapError,
    InvalidArityError,
    InvalidSizeError,
    OwnershipError,
    SpecSyntaxError,
    UnknownElementError,
    WorkbenchError,
)
from .ideals import (
    IdealVerdict,
    all_ideals,
    ideal_verdict,
    primary_implies_maximal_check,
    radical,
    sandwich_check,
)
from .localize import (
    LocalizedRing,
    artinian_conclusion_check,
    canonical_kernel_check,
    localize,
    pi_regular_bridge_check,
    vnr_bridge_check,
)
from .multsets import (
    MultiplicativeSet,
    all_mult_subsets,
    closure,
    map_set,
    one_set,
    units_set,
)
from .result import CheckResult
from .rings import (
    ClassicalSets,
    FiniteRing,
    Ideal,
    RingHom,
    classical_sets,
    direct_product,
    ideal_span,
    is_isomorphic,
    make_zn,
    product_projection,
    quotient,
    trivial_extension,
    truncated_poly,
)
from .search import (
    CorpusConfig,
    Finding,
    enumerate_corpus,
    find_instances,
    small_config,
    std_config,
)
from .transfer import hom_transfer_check, product_decomposition_check
from .verify import (
    PROPOSITION_IDS,
    PropOutcome,
    VerifyReport,
    Violation,
    run_verification,
)

__all__ = [
    "bit", "full_mask", "mask_of", "members", "popcount",
    "ClassificationReport", "UniformFlag", "classify",
    "boolean_decomposition_check", "max_relative_check",
    "reduced_equivalences_check", "s_field_equivalence_check",
    "zero_divisor_idempotent_check",
    "ElementSets", "SElementSets", "WeakInverse", "Witness", "WitnessKind",
    "element_sets", "witness_for", "weak_inverse", "sum_closure_status",
    "inclusion_chain_check", "multiplicative_closure_check",
    "torsion_intersection_check", "vnr_characterization_check",
    "weakly_reduced_consequence_check",
    "WorkbenchError", "InvalidSizeError", "InvalidArityError",
    "OwnershipError", "DegenerateSetError", "EnumerationCapError",
    "UnknownElementError", "SpecSyntaxError",
    "IdealVerdict", "all_ideals", "ideal_verdict", "radical",
    "primary_implies_maximal_check", "sandwich_check",
    "LocalizedRing", "localize", "canonical_kernel_check",
    "vnr_bridge_check", "pi_regular_bridge_check",
    "artinian_conclusion_check",
    "MultiplicativeSet", "closure", "all_mult_subsets", "map_set",
    "one_set", "units_set",
    "CheckResult",
    "ClassicalSets", "FiniteRing", "Ideal", "RingHom", "classical_sets",
    "direct_product", "ideal_span", "is_isomorphic", "make_zn",
    "product_projection", "quotient", "trivial_extension", "truncated_poly",
    "CorpusConfig", "Finding", "enumerate_corpus", "find_instances",
    "small_config", "std_config",
    "hom_transfer_check", "product_decomposition_check",
    "PROPOSITION_IDS", "PropOutcome", "VerifyReport", "Violation",
    "run_verification",
]
