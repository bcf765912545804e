"""linfor: exact computations around linear-forest-free graphs.

Builds the extremal host graphs, counts cliques exactly, decides
L_k-freeness and matching numbers with exact search, applies closure and
core transforms, and verifies the extremal/stability results by independent
brute-force oracles at desk scale.
"""

from .canon import canonical_edge_mask, canonical_graph, is_canonical
from .cliques import CliqueVector, clique_vector, count_cliques
from .constructions import (
    ConstructionParams,
    binomial,
    build_host,
    clique_bound_from_edges,
    h_r,
    host_clique_count,
    real_binomial,
)
from .forests import (
    BudgetExceeded,
    ForestResult,
    MatchingResult,
    g_extremal,
    is_linear_forest,
    is_lk_free,
    matching_number,
    max_linear_forest,
    twin_classes,
)
from .graphcore import (
    Graph,
    Graph6Error,
    degree_sequence,
    disjoint_union,
    edges_between,
    induced_subgraph,
    iter_bits,
    parse_graph6,
    to_graph6,
)
from .transforms import (
    PosaWitness,
    SplitResult,
    core,
    degree_split,
    find_posa,
    k_closure,
    posa_clique_bound,
)

__version__ = "0.1.0"

__all__ = [
    "canonical_edge_mask",
    "canonical_graph",
    "is_canonical",
    "CliqueVector",
    "clique_vector",
    "count_cliques",
    "ConstructionParams",
    "binomial",
    "build_host",
    "clique_bound_from_edges",
    "h_r",
    "host_clique_count",
    "real_binomial",
    "BudgetExceeded",
    "ForestResult",
    "MatchingResult",
    "g_extremal",
    "is_linear_forest",
    "is_lk_free",
    "matching_number",
    "max_linear_forest",
    "twin_classes",
    "Graph",
    "Graph6Error",
    "degree_sequence",
    "disjoint_union",
    "edges_between",
    "induced_subgraph",
    "iter_bits",
    "parse_graph6",
    "to_graph6",
    "PosaWitness",
    "SplitResult",
    "core",
    "degree_split",
    "find_posa",
    "k_closure",
    "posa_clique_bound",
    "__version__",
]
