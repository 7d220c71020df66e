"""
The 4^k + n bound in exact arithmetic
=====================================

Free PMCs of the extended graph are capped by four terms, non-free ones by its
vertex count n + 2^k - 1. The sum stays at or below 4^k + n for every k checked.
"""

from pmc_atlas import free_bound_terms, verify_theorem_inequality

for k in (1, 3, 5, 10):
    t = free_bound_terms(k)
    print(k, tuple(t), t.total + 2**k - 1, 4**k)

rows = verify_theorem_inequality(64)
print(all(r.passed for r in rows))

# the ratio to 4^k settles at 1/6, the share of the 4 S(k,4) term
for r in rows[::9]:
    print(r.k, float((r.terms.total + r.added_vertices) / r.four_k))
