"""
Potential maximal cliques of small graphs
=========================================

Build a few graphs, test single vertex sets, and list every PMC.
"""

from pmc_atlas import Graph, build_star, check_pmc, enumerate_pmcs, members, vset

# A path 0-1-2. {0,1} is a PMC; the whole vertex set is not, because 0 and 2
# are non-adjacent and no component outside joins them.
path = Graph.from_edges(3, [(0, 1), (1, 2)])
print(check_pmc(path, vset([0, 1])))
print(check_pmc(path, vset([0, 1, 2])))

# Brute force over all 2^n subsets gives every PMC, in ascending mask order.
cycle = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
for rec in enumerate_pmcs(cycle):
    print(members(rec.omega), "free" if rec.free else f"centered at {rec.nonfree_center}")

# Stars have a cover of size one and n - 1 PMCs, one per leaf. None is free:
# each equals the closed neighborhood of its leaf.
for n in (4, 8, 12):
    recs = enumerate_pmcs(build_star(n))
    print(n, len(recs), sorted(r.nonfree_center for r in recs))
