"""Exact combinatorics of arc permutations in the symmetric and
hyperoctahedral groups: statistics, pattern characterizations, canonical
factorizations, and verified closed-form enumerators."""

from .arcsets import (
    CircleOn,
    generate_arc,
    generate_b_arc,
    generate_hyperoctahedral,
    generate_left_unimodal,
    generate_signed_arc,
    generate_symmetric,
    is_arc,
    is_b_arc,
    is_interval_on,
    is_interval_zn,
    is_left_unimodal,
    is_signed_arc,
)
from .canonical import (
    ExponentVectorA,
    ExponentVectorB,
    cycle_A,
    cycle_B,
    decompose_A,
    decompose_B,
    fmaj_from_exponents,
    is_arc_by_exponents,
    is_b_arc_by_exponents,
    maj_from_exponents,
    recompose_A,
    recompose_B,
)
from .patterns import (
    Occurrence,
    arc_forbidden,
    avoids_all,
    b_arc_forbidden,
    contains,
    find_occurrence,
    signed_arc_forbidden,
    triple_orientation,
)
from .perms import (
    Character,
    Permutation,
    SignedPermutation,
    StatProfile,
    b_order_key,
    character_value,
)
from .poly import (
    ExactDivisionError,
    SparsePolynomial,
    WeightSpec,
    const,
    enumerator,
    exact_div,
    poly_product,
    q_bracket,
    var,
)

__version__ = "0.1.0"

__all__ = [
    "Character",
    "CircleOn",
    "ExactDivisionError",
    "ExponentVectorA",
    "ExponentVectorB",
    "Occurrence",
    "Permutation",
    "SignedPermutation",
    "SparsePolynomial",
    "StatProfile",
    "WeightSpec",
    "arc_forbidden",
    "avoids_all",
    "b_arc_forbidden",
    "b_order_key",
    "character_value",
    "const",
    "contains",
    "cycle_A",
    "cycle_B",
    "decompose_A",
    "decompose_B",
    "enumerator",
    "exact_div",
    "find_occurrence",
    "fmaj_from_exponents",
    "generate_arc",
    "generate_b_arc",
    "generate_hyperoctahedral",
    "generate_left_unimodal",
    "generate_signed_arc",
    "generate_symmetric",
    "is_arc",
    "is_arc_by_exponents",
    "is_b_arc",
    "is_b_arc_by_exponents",
    "is_interval_on",
    "is_interval_zn",
    "is_left_unimodal",
    "is_signed_arc",
    "maj_from_exponents",
    "poly_product",
    "q_bracket",
    "recompose_A",
    "recompose_B",
    "signed_arc_forbidden",
    "triple_orientation",
    "var",
]
