"""Exact counts and verified certificates for triangle-maximal graphs
avoiding the suspension of P4.

The suspension of P4 is the 5-vertex graph made of a 4-vertex path plus
an apex joined to all four path vertices.  Writing ex(n, K3, P4hat) for
the maximum number of triangles in an n-vertex graph with no such
suspension, the package computes exact values of ex at desk scale,
builds the matching lower-bound constructions, machine-checks the
counting lemmas behind the floor(n*n/8) upper bound over exhaustive
labeled universes, and ties the problem to Berge-K3-free 3-uniform
hypergraphs through the triangle hypergraph T(G).
"""

from .berge import (
    BergeK3Witness,
    Hypergraph3,
    HypergraphFormatError,
    contains_berge_k3,
    format_hypergraph,
    lift,
    max_berge_k3_free,
    parse_hypergraph,
)
from .constructions import (
    construction_parts,
    extremal_construction,
    predicted_extremal_value,
    two_k4_shared_vertex,
)
from .detect import (
    OTHER,
    STAR,
    TRIANGLE,
    Component,
    P4HatWitness,
    classify_components,
    contains_k4,
    contains_p4,
    find_p4hat,
    is_k4_free,
    is_p4hat_free,
    triangle_degree,
)
from .errors import PreconditionError, ResourceBudgetError, ScaleError
from .graphs import (
    Graph,
    Graph6Error,
    canonical_form,
    canonical_graph,
    canonical_key,
    edge_triangle_multiplicity,
    from_graph6,
    induced_subgraph,
    relabel,
    to_graph6,
    triangle_count,
    triangles,
)
from .search import (
    ForbiddenSet,
    FRow,
    SearchReport,
    cheapest_exact,
    ex_augment,
    ex_branch_bound,
    ex_naive,
    f_row,
    f_table,
)
from .verify import (
    LEMMA_IDS,
    VerificationReport,
    check_k4_attachment,
    check_mantel,
    check_private_edges,
    check_triangle_degree_bound,
    derive_g_prime,
    reports_to_json,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "BergeK3Witness",
    "Component",
    "ForbiddenSet",
    "FRow",
    "Graph",
    "Graph6Error",
    "Hypergraph3",
    "HypergraphFormatError",
    "LEMMA_IDS",
    "OTHER",
    "P4HatWitness",
    "PreconditionError",
    "ResourceBudgetError",
    "STAR",
    "ScaleError",
    "SearchReport",
    "TRIANGLE",
    "VerificationReport",
    "canonical_form",
    "canonical_graph",
    "canonical_key",
    "check_k4_attachment",
    "check_mantel",
    "check_private_edges",
    "check_triangle_degree_bound",
    "cheapest_exact",
    "classify_components",
    "construction_parts",
    "contains_berge_k3",
    "contains_k4",
    "contains_p4",
    "derive_g_prime",
    "edge_triangle_multiplicity",
    "ex_augment",
    "ex_branch_bound",
    "ex_naive",
    "extremal_construction",
    "f_row",
    "f_table",
    "find_p4hat",
    "format_hypergraph",
    "from_graph6",
    "induced_subgraph",
    "is_k4_free",
    "is_p4hat_free",
    "lift",
    "max_berge_k3_free",
    "parse_hypergraph",
    "predicted_extremal_value",
    "relabel",
    "reports_to_json",
    "run_suite",
    "to_graph6",
    "triangle_count",
    "triangle_degree",
    "triangles",
    "two_k4_shared_vertex",
]
