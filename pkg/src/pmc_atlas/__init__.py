"""Enumerate and certify potential maximal cliques (PMCs) of small graphs.

Counts are tied to the vertex cover size ``k``: at most ``4^k + n`` PMCs
for any graph, with the incidence graphs ``G_k`` showing the ``4^k`` growth
is real.  Vertex sets are integer bitmasks throughout.
"""
from .bounds import (
    BoundReport,
    binomial,
    bound_report,
    free_bound_terms,
    lower_bound_sum,
    stirling2,
    verify_theorem_inequality,
)
from .constructions import (
    GkGraph,
    MGraph,
    build_Gk,
    build_M,
    build_star,
    constructed_free_pmcs,
    lift_free_pmc,
    pmc_from_tripartition,
    random_graph_with_cover,
    tripartitions,
)
from .cover import (
    CoverPartition,
    PartitionType,
    VertexCover,
    classify_free_pmcs_by_partition,
    cover_partition,
    is_vertex_cover,
    minimum_vertex_cover,
)
from .errors import BudgetError, ContractError, InputError, InvariantViolation, ParseError, PmcAtlasError
from .graph import (
    Graph,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_full_component,
    neighborhood_set,
)
from .io import parse_edge_list, parse_graph6, read_graph, serialize_edge_list, to_graph6, write_graph
from .pmc import (
    PmcCheck,
    PmcCounts,
    PmcRecord,
    check_pmc,
    count_pmcs,
    enumerate_pmcs,
    is_free,
    is_pmc,
    nonfree_center,
)
from .vertexset import VertexSet, members, vset

__version__ = "0.1.0"
