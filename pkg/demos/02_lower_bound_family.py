"""
The incidence graphs G_k
========================

G_k joins each 2-subset {i,j} of {1..k} to i and j. Its integers form a
vertex cover of size k, and its PMC count grows like 4^k.
"""

from pmc_atlas import (
    build_Gk,
    constructed_free_pmcs,
    count_pmcs,
    lower_bound_sum,
    pmc_from_tripartition,
    stirling2,
)

g4 = build_Gk(4)
print(g4.graph.labels)

# Every split of {1..k} into three blocks gives a free PMC: the pair vertices
# whose ends fall in different blocks.
omega = pmc_from_tripartition(g4, [{1, 2}, {3}, {4}])
print([g4.graph.label(v) for v in range(g4.graph.n) if omega >> v & 1])

# Adding integer k to such a PMC of G_{k-1} keeps it a free PMC of G_k, so the
# class meeting the integers in exactly 1..i has at least S(k-i, 3) members.
for i in range(5):
    print(i, len(constructed_free_pmcs(4, i)), stirling2(4 - i, 3))

# Brute-force counts against the constructive lower sum and the 4^k + n cap.
print(f"{'k':>2} {'n':>3} {'lower':>6} {'PMCs':>6} {'4^k+n':>7}")
for k in range(3, 7):
    g = build_Gk(k).graph
    total = count_pmcs(g).total
    print(f"{k:>2} {g.n:>3} {lower_bound_sum(k):>6} {total:>6} {4**k + g.n:>7}")
