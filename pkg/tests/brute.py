"""Independent brute-force oracles for cross-checking the library.

These deliberately share no code with the package: the matcher is a
bitmask DP over vertex subsets and the cover search enumerates subsets
in increasing size, so agreement with the library is meaningful.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from planarcvc.graph import Graph


def brute_matching_size(g: Graph) -> int:
    """Maximum matching size by DP over the subset of still-free vertices."""
    verts = g.vertices()
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    nbr_masks = [0] * n
    for v in verts:
        for w in g.neighbors(v):
            nbr_masks[index[v]] |= 1 << index[w]

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        low = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << low)
        result = best(rest)  # leave `low` unmatched
        partners = nbr_masks[low] & rest
        while partners:
            p = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            result = max(result, 1 + best(rest & ~(1 << p)))
        return result

    out = best((1 << n) - 1)
    best.cache_clear()
    return out


def brute_minimum_cvc(g: Graph) -> int | None:
    """Minimum connected vertex cover size by full subset enumeration."""
    verts = g.vertices()
    edges = g.edges()
    if not edges:
        return 0
    for size in range(1, len(verts) + 1):
        for subset in combinations(verts, size):
            chosen = set(subset)
            if all(u in chosen or w in chosen for u, w in edges) and (
                g.induced_is_connected(chosen)
            ):
                return size
    return None
