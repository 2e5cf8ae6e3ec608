"""Exact chromatic polynomials of cycle graphs, four independent ways.

Every quantity is computed over arbitrary-precision integers:

* ``cycle_closed_form`` / ``path_closed_form`` / ``complete_closed_form`` --
  reference polynomials built by symbolic expansion.
* ``chromatic_polynomial_dc`` -- deletion-contraction on any multigraph.
* ``cycle_inclusion_exclusion`` / ``chromatic_by_subsets`` -- the
  inclusion-exclusion route, cycle-specific and general.
* ``chromatic_count_via_walks`` -- closed-walk counting in the complete graph.
* ``encode_phi`` / ``decode_psi`` -- the cyclic-descent coloring codec, with
  ``count_via_bijection`` for the parity-split count.
* ``count_proper_colorings`` -- the brute-force ground truth.

``verify_cycle_methods`` runs all routes side by side and reports any
disagreement.
"""

from chromakit._core import (
    BijectionCount,
    BudgetExceededError,
    DcStats,
    IntMatrix,
    MAX_ASSIGNMENTS_BUDGET,
    MAX_ENUMERATED_BUDGET,
    Multigraph,
    Polynomial,
    SUBSET_EDGE_BUDGET,
    VerifyFailure,
    VerifyReport,
    __version__,
    adjacency_matrix,
    chromatic_by_subsets,
    chromatic_count_via_walks,
    chromatic_polynomial_dc,
    chromatic_polynomial_path,
    complete_closed_form,
    complete_graph,
    complete_graph_closed_walks,
    count_closed_walks,
    count_proper_colorings,
    count_via_bijection,
    count_walks_brute,
    cycle_closed_form,
    cycle_graph,
    cycle_inclusion_exclusion,
    cyclic_descents,
    decode_psi,
    decode_psi_trace,
    encode_phi,
    enumerate_proper_cycle_colorings,
    exceptional_colorings,
    from_edge_list,
    is_constant,
    matrix_power,
    path_closed_form,
    path_graph,
    read_edge_list_file,
    to_edge_list,
    verify_cycle_methods,
    write_edge_list_file,
)

__all__ = [
    "BijectionCount",
    "BudgetExceededError",
    "DcStats",
    "IntMatrix",
    "MAX_ASSIGNMENTS_BUDGET",
    "MAX_ENUMERATED_BUDGET",
    "Multigraph",
    "Polynomial",
    "SUBSET_EDGE_BUDGET",
    "VerifyFailure",
    "VerifyReport",
    "adjacency_matrix",
    "chromatic_by_subsets",
    "chromatic_count_via_walks",
    "chromatic_polynomial_dc",
    "chromatic_polynomial_path",
    "complete_closed_form",
    "complete_graph",
    "complete_graph_closed_walks",
    "count_closed_walks",
    "count_proper_colorings",
    "count_via_bijection",
    "count_walks_brute",
    "cycle_closed_form",
    "cycle_graph",
    "cycle_inclusion_exclusion",
    "cyclic_descents",
    "decode_psi",
    "decode_psi_trace",
    "encode_phi",
    "enumerate_proper_cycle_colorings",
    "exceptional_colorings",
    "from_edge_list",
    "is_constant",
    "matrix_power",
    "path_closed_form",
    "path_graph",
    "read_edge_list_file",
    "to_edge_list",
    "verify_cycle_methods",
    "write_edge_list_file",
]
