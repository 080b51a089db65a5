"""Exact computations with Schur rings over finite abelian groups."""
from .algebra import AlgebraElement, class_sum, format_element, hadamard, parse_element, star
from .analysis import TidinessReport, is_tidy, primitive_idempotents_general
from .enumeration import EnumerationResult, all_schur_rings, canonical_form
from .errors import SchurKitError
from .groups import AbelianGroup, GroupHom, Subgroup, all_subgroups, cyclic_subgroup, parse_group, quotient
from .idempotents import (
    decompose,
    epsilon,
    idempotent_system,
    primitive_idempotents_QG,
    primitivity_oracle,
    schur_primitive_idempotents,
)
from .lattices import SemiLattice
from .schur import (
    Partition,
    SchurRing,
    cayley_image,
    dot_product,
    group_algebra,
    lattice_schur,
    maximal_lattice_subring,
    orbit_schur,
    s_subgroups,
    trivial_schur,
    verify_schur,
    wedge_product,
)
from .wedderburn import omega, perlis_walker, wedderburn_decomposition

__all__ = [
    "AbelianGroup",
    "AlgebraElement",
    "all_schur_rings",
    "all_subgroups",
    "canonical_form",
    "cayley_image",
    "class_sum",
    "cyclic_subgroup",
    "decompose",
    "dot_product",
    "EnumerationResult",
    "epsilon",
    "format_element",
    "group_algebra",
    "GroupHom",
    "hadamard",
    "idempotent_system",
    "is_tidy",
    "lattice_schur",
    "maximal_lattice_subring",
    "omega",
    "orbit_schur",
    "parse_element",
    "parse_group",
    "Partition",
    "perlis_walker",
    "primitive_idempotents_general",
    "primitive_idempotents_QG",
    "primitivity_oracle",
    "quotient",
    "s_subgroups",
    "schur_primitive_idempotents",
    "SchurKitError",
    "SchurRing",
    "SemiLattice",
    "star",
    "Subgroup",
    "TidinessReport",
    "trivial_schur",
    "verify_schur",
    "wedderburn_decomposition",
    "wedge_product",
]
