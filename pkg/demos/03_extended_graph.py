"""
Structure of PMCs in the extended graph
=======================================

Adding a vertex M_X with neighborhood X for every non-empty X inside a vertex
cover can only add PMCs, and it makes the PMCs easy to classify: each splits
the cover into its intersection with the PMC and at most three parts.
"""

from collections import Counter

from pmc_atlas import (
    build_M,
    classify_free_pmcs_by_partition,
    count_pmcs,
    enumerate_pmcs,
    minimum_vertex_cover,
    random_graph_with_cover,
)
from pmc_atlas.harness import check_m_graph

g, _ = random_graph_with_cover(4, 6, "0.5", seed=2)
vk = minimum_vertex_cover(g)
mg = build_M(g, vk)
print(f"base: n={g.n}, k={vk.k}, PMCs={count_pmcs(g).total}")
print(f"extended: n={mg.graph.n}, PMCs={count_pmcs(mg.graph).total}")

# Free PMCs grouped by the partition they induce on the cover.
groups = classify_free_pmcs_by_partition(mg.graph, mg.cover, m_graph=True)
print(Counter(key.type_tag.value for key, omegas in groups.items() for _ in omegas))
for key, omegas in list(groups.items())[:5]:
    print(key.type_tag.value, len(omegas))

# No violations of the part count, the outer-vertex exclusion, or the caps.
print(check_m_graph(mg, enumerate_pmcs(mg.graph)))
