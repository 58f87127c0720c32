"""Companion bases for quivers of cluster-tilted algebras of type A, D, E."""

from .companion import (
    CompanionBasis,
    DVectorSet,
    MutationSearchError,
    companion_basis_failure,
    companion_basis_for,
    d_vector_set,
    dumps_companion_basis,
    dumps_d_vector_set,
    find_mutation_sequence_to_tree,
    initial_companion_basis,
    inward_update_components,
    is_companion_basis,
    mutate_inward,
    loads_companion_basis,
    mutate_outward,
    mutation_map_inward,
    phi_in_type_a,
    root_with_support_string,
    sign_change,
    transform,
)
from .quiver import (
    ExchangeMatrix,
    canonical_companion,
    cartan_counterpart,
    chordless_cycles,
    dumps_exchange_matrix,
    dynkin_type_of,
    finite_type_failure,
    is_cyclically_oriented,
    is_finite_type,
    is_positive_quasi_cartan,
    loads_exchange_matrix,
    mutate,
    mutate_sequence,
    satisfies_cycle_sign_condition,
    simultaneous_sign_change,
)
from .root_system import (
    DynkinType,
    RootSystem,
    build_root_system,
    diagram_automorphisms,
    expand_in_lattice_basis,
    height_in_basis,
    is_z_basis,
)
from .type_a import (
    StringWalk,
    Triangulation,
    almost_positive_root_of_diagonal,
    diagonals_cross,
    dumps_triangulation,
    enumerate_strings,
    enumerate_triangulations,
    indecomposable_dim_vectors,
    is_strong_companion_basis,
    loads_triangulation,
    quiver_from_triangulation,
    random_triangulation,
    relations_of,
    string_dim_vector,
)

__all__ = [
    "CompanionBasis",
    "DVectorSet",
    "DynkinType",
    "ExchangeMatrix",
    "MutationSearchError",
    "RootSystem",
    "StringWalk",
    "Triangulation",
    "almost_positive_root_of_diagonal",
    "build_root_system",
    "canonical_companion",
    "cartan_counterpart",
    "chordless_cycles",
    "companion_basis_failure",
    "companion_basis_for",
    "d_vector_set",
    "diagonals_cross",
    "diagram_automorphisms",
    "dumps_companion_basis",
    "dumps_d_vector_set",
    "dumps_exchange_matrix",
    "dumps_triangulation",
    "dynkin_type_of",
    "enumerate_strings",
    "enumerate_triangulations",
    "expand_in_lattice_basis",
    "find_mutation_sequence_to_tree",
    "finite_type_failure",
    "height_in_basis",
    "indecomposable_dim_vectors",
    "initial_companion_basis",
    "inward_update_components",
    "is_companion_basis",
    "is_cyclically_oriented",
    "is_finite_type",
    "is_positive_quasi_cartan",
    "is_strong_companion_basis",
    "is_z_basis",
    "loads_companion_basis",
    "loads_exchange_matrix",
    "loads_triangulation",
    "mutate",
    "mutate_inward",
    "mutate_outward",
    "mutate_sequence",
    "mutation_map_inward",
    "phi_in_type_a",
    "quiver_from_triangulation",
    "random_triangulation",
    "relations_of",
    "root_with_support_string",
    "satisfies_cycle_sign_condition",
    "sign_change",
    "simultaneous_sign_change",
    "string_dim_vector",
    "transform",
]
