"""Exact arithmetic for lambda-quiddities over cyclic subgroups of C."""

from .classify import (
    CensusMember,
    ClassificationOutcome,
    EnumerationReport,
    ParityReport,
    classify,
    enumerate_quiddities,
    irreducible_census,
    parity_audit,
    small_entry_positions,
    transfer_certificate,
    transfer_theta,
)
from .core import (
    Mat2,
    NotPlusMinusOne,
    QuiddityTuple,
    SizeTooSmall,
    ZPolyGraded,
    canonical_form,
    canonical_multipliers,
    continuant,
    dihedral_images,
    e_matrix,
    equivalent,
    euler_expansion,
    is_quiddity,
    m_from_continuants,
    m_product,
    oplus_multipliers,
    oplus_sum,
    reduce_pm_one,
)
from .numfield import (
    AmbiguousHint,
    BoxC,
    FieldElement,
    IrreducibilityUnknown,
    NotIrreducible,
    NotMonic,
    NotSquarefree,
    NumberField,
    RatInterval,
    UndecidableAtPrecision,
    ZeroGenerator,
    embed,
    field_from_descriptor,
    field_make,
    field_to_descriptor,
    isolate_roots,
    modulus_compare,
    subgroup_member,
)
from .polycrit import (
    DiskRootCount,
    IrreducibilityVerdict,
    eisenstein,
    gauss_disk_count_strict,
    irreducible_over_Q,
    modp_irreducible,
    osada,
    rouche_dominant_count,
    schur_cohn_count,
)
from .polynomials import QPoly, count_real_roots, real_roots_isolated
from .reducibility import (
    NotAQuiddity,
    ReductionWitness,
    brute_force_reduction,
    find_reduction,
    witness_replay,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousHint",
    "BoxC",
    "CensusMember",
    "ClassificationOutcome",
    "DiskRootCount",
    "EnumerationReport",
    "FieldElement",
    "IrreducibilityUnknown",
    "IrreducibilityVerdict",
    "Mat2",
    "NotAQuiddity",
    "NotIrreducible",
    "NotMonic",
    "NotPlusMinusOne",
    "NotSquarefree",
    "NumberField",
    "ParityReport",
    "QPoly",
    "QuiddityTuple",
    "RatInterval",
    "ReductionWitness",
    "SizeTooSmall",
    "UndecidableAtPrecision",
    "ZPolyGraded",
    "ZeroGenerator",
    "brute_force_reduction",
    "canonical_form",
    "canonical_multipliers",
    "classify",
    "continuant",
    "count_real_roots",
    "dihedral_images",
    "e_matrix",
    "eisenstein",
    "embed",
    "enumerate_quiddities",
    "equivalent",
    "euler_expansion",
    "field_from_descriptor",
    "field_make",
    "field_to_descriptor",
    "find_reduction",
    "gauss_disk_count_strict",
    "irreducible_census",
    "irreducible_over_Q",
    "is_quiddity",
    "isolate_roots",
    "m_from_continuants",
    "m_product",
    "modp_irreducible",
    "modulus_compare",
    "oplus_multipliers",
    "oplus_sum",
    "osada",
    "parity_audit",
    "real_roots_isolated",
    "reduce_pm_one",
    "rouche_dominant_count",
    "schur_cohn_count",
    "small_entry_positions",
    "subgroup_member",
    "transfer_certificate",
    "transfer_theta",
    "witness_replay",
]
