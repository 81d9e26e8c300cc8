"""Exact maximal Casimir eigenvalues on exterior powers of simple Lie algebras."""

from .characters import (
    Character,
    DEFAULT_BUDGET,
    decompose_character,
    exterior_power_character,
    freudenthal_multiplicity,
    full_exterior_character,
    irreducible_character,
    krho_box_character,
    tensor_character,
)
from .errors import (
    BudgetExceeded,
    InvalidCartanType,
    MismatchedRootSystems,
    NotModuleCharacter,
    StrategyDisagreement,
)
from .ideals import (
    enumerate_ideals,
    ideal_weight_sum,
    is_b_normal,
    root_poset,
    verify_weight_sum_injectivity,
)
from .root_system import (
    CartanType,
    RootSystem,
    Weight,
    build_root_system,
    casimir_eigenvalue,
    dominant_representative,
    killing_inner,
    simple_reflection,
    simple_types_up_to,
    weyl_dim,
    weyl_orbit,
)
from .spectrum import (
    SpectrumRow,
    VerificationReport,
    basis_weight_labels,
    decompose_exterior,
    mi_bruteforce,
    mi_via_characters,
    mi_via_ideals,
    spectrum_table,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CartanType",
    "Character",
    "DEFAULT_BUDGET",
    "InvalidCartanType",
    "MismatchedRootSystems",
    "NotModuleCharacter",
    "RootSystem",
    "SpectrumRow",
    "StrategyDisagreement",
    "VerificationReport",
    "Weight",
    "basis_weight_labels",
    "build_root_system",
    "casimir_eigenvalue",
    "decompose_character",
    "decompose_exterior",
    "dominant_representative",
    "enumerate_ideals",
    "exterior_power_character",
    "freudenthal_multiplicity",
    "full_exterior_character",
    "ideal_weight_sum",
    "irreducible_character",
    "is_b_normal",
    "killing_inner",
    "krho_box_character",
    "mi_bruteforce",
    "mi_via_characters",
    "mi_via_ideals",
    "root_poset",
    "simple_reflection",
    "simple_types_up_to",
    "spectrum_table",
    "tensor_character",
    "verify_theorems",
    "verify_weight_sum_injectivity",
    "weyl_dim",
    "weyl_orbit",
]
