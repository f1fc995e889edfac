"""
Finite rings: tables, constructors, element classes, ideals and decompositions.
"""

from .constructors import construct, matrix, product_ring, triangular, zmod
from .decomposition import (
    Decomposition,
    central_idempotent_decomposition,
    corner_ring,
    primitive_central_idempotents,
    product_structure,
)
from .elements import (
    center,
    central_idempotents,
    idempotents,
    is_local,
    is_nil,
    jacobson_radical,
    left_regular_elements,
    nil_radical,
    nilpotent_elements,
    right_regular_elements,
    units,
)
from .finite_ring import FiniteRing, ProductStructure, check_ring_axioms, verify_homomorphism
from .ideals import (
    check_ideal_lattice,
    enumerate_ideals,
    ideal_generated,
    ideal_sum,
    is_ideal,
    principal_ideal,
    quotient_ring,
)

__all__ = [
    "FiniteRing", "ProductStructure", "check_ring_axioms", "verify_homomorphism",
    "construct", "zmod", "matrix", "triangular", "product_ring",
    "units", "nilpotent_elements", "jacobson_radical", "nil_radical", "is_nil", "is_local",
    "left_regular_elements", "right_regular_elements", "center", "idempotents", "central_idempotents",
    "is_ideal", "ideal_generated", "ideal_sum", "principal_ideal", "enumerate_ideals",
    "check_ideal_lattice", "quotient_ring",
    "Decomposition", "central_idempotent_decomposition", "corner_ring",
    "primitive_central_idempotents", "product_structure",
]
