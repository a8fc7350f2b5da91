"""Regular triangulations of the lattice simplex and Sperner labeling bounds."""

from .bounds import emit_figure1_csv, lower_bound, q2_exact, upper_bound
from .hypergraph import build_hypergraph, count_nonmono_hyperedges, hyperedges_are_cells
from .labeling import (
    Labeling,
    allowed_colors,
    count_cells_with_at_least_j_colors,
    count_nonmono,
    first_choice_labeling,
    is_sperner,
)
from .lattice import (
    DomainError,
    enum_delta_points,
    enum_monotone_points,
    lattice_to_monotone,
    monotone_to_lattice,
    vertex_id,
)
from .search import SearchConfig, SearchResult, branch_bound_min, brute_force_min, verify_certificate
from .triangulation import (
    GraphVariant,
    Triangulation,
    triangulate,
    triangulate_by_cliques,
    triangulate_by_permutations,
    verify_triangulation,
)

__all__ = [
    "DomainError", "GraphVariant", "Labeling", "SearchConfig", "SearchResult", "Triangulation",
    "allowed_colors", "branch_bound_min", "brute_force_min", "build_hypergraph",
    "count_cells_with_at_least_j_colors", "count_nonmono", "count_nonmono_hyperedges",
    "emit_figure1_csv", "enum_delta_points", "enum_monotone_points", "first_choice_labeling",
    "hyperedges_are_cells", "is_sperner", "lattice_to_monotone", "lower_bound", "monotone_to_lattice",
    "q2_exact", "triangulate", "triangulate_by_cliques", "triangulate_by_permutations",
    "upper_bound", "verify_certificate", "verify_triangulation", "vertex_id",
]
__version__ = "0.1.0"
