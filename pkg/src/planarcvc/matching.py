"""Maximum cardinality matching in general graphs (blossom algorithm).

Augmenting-path search with blossom shrinking, O(V^3) overall. The input
graph does not have to be planar or connected; correctness, not the
sub-quadratic factor of fancier matchers, is the contract here. Small
instances are cross-checked against an exhaustive matcher in the tests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, VertexId


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint edges, stored as (u, w) pairs with u < w."""

    edges: frozenset[tuple[VertexId, VertexId]] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertices(self) -> set[VertexId]:
        return {v for e in self.edges for v in e}

    def validate(self, g: Graph) -> None:
        seen: set[VertexId] = set()
        for u, w in self.edges:
            assert g.has_edge(u, w), f"matched pair ({u},{w}) is not an edge"
            assert u not in seen and w not in seen, f"({u},{w}) shares an endpoint"
            seen.update((u, w))


def maximum_matching(g: Graph) -> Matching:
    """Compute a maximum cardinality matching of g."""
    verts = g.vertices()
    n = len(verts)
    if n == 0:
        return Matching()
    index = {v: i for i, v in enumerate(verts)}
    adj = [[index[w] for w in g.neighbors(v)] for v in verts]

    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))
    in_queue = [False] * n

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            in_queue[i] = False
        in_queue[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle: shrink the blossom around the common ancestor.
                    cur_base = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, cur_base, to, in_blossom)
                    mark_path(to, cur_base, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur_base
                            if not in_queue[i]:
                                in_queue[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    if not in_queue[match[to]]:
                        in_queue[match[to]] = True
                        queue.append(match[to])
        return -1

    for v in range(n):
        if match[v] != -1:
            continue
        leaf = find_augmenting_path(v)
        if leaf == -1:
            continue
        # Alternate matched/unmatched edges back to the root.
        while leaf != -1:
            pv = parent[leaf]
            next_leaf = match[pv]
            match[leaf] = pv
            match[pv] = leaf
            leaf = next_leaf

    pairs = frozenset(
        (min(verts[i], verts[match[i]]), max(verts[i], verts[match[i]]))
        for i in range(n)
        if match[i] > i
    )
    return Matching(edges=pairs)


def matching_bound_holds(g: Graph) -> bool:
    """Checker for the planar matching bound: max matching >= ceil(n3 / 3).

    n3 counts the vertices of degree at least 3; the bound is a theorem
    for simple planar graphs, so a False here signals a matcher bug, not
    a property of the input.
    """
    n3 = sum(1 for v in g.vertices() if g.degree(v) >= 3)
    return 3 * maximum_matching(g).size >= n3
