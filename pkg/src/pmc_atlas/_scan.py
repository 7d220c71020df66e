"""Compiled brute-force scan over a contiguous range of subset bitmasks."""
from __future__ import annotations

import numpy as np
from numba import njit

# masks are int64, so the sign bit and one guard bit are unavailable
SCAN_MAX_VERTICES = 62


@njit(cache=True, nogil=True)
def scan_range(adj, n, lo, hi):
    """Return, ascending, every mask in ``[lo, hi)`` satisfying both PMC conditions."""
    full = (np.int64(1) << n) - 1
    boundary = np.empty(max(n, 1), np.int64)
    out = np.empty(64, np.int64)
    count = 0
    for mask in range(lo, hi):
        omega = np.int64(mask)
        rest = full & ~omega
        ncomp = 0
        has_full = False
        r = rest
        while r != 0:
            seed = r & -r
            comp = seed
            frontier = seed
            reach = np.int64(0)
            while frontier != 0:
                step = np.int64(0)
                for v in range(n):
                    if (frontier >> v) & 1:
                        step |= adj[v]
                reach |= step
                frontier = step & rest & ~comp
                comp |= frontier
            nc = reach & ~comp
            if nc == omega:
                has_full = True
                break
            boundary[ncomp] = nc
            ncomp += 1
            r &= ~comp
        if has_full:
            continue
        cliquish = True
        for u in range(n):
            if (omega >> u) & 1:
                seen = adj[u] | (np.int64(1) << u)
                for c in range(ncomp):
                    if (boundary[c] >> u) & 1:
                        seen |= boundary[c]
                if omega & ~seen != 0:
                    cliquish = False
                    break
        if not cliquish:
            continue
        if count == out.size:
            grown = np.empty(out.size * 2, np.int64)
            grown[:count] = out
            out = grown
        out[count] = omega
        count += 1
    return out[:count].copy()
