"""Exact Connected Vertex Cover solver and verifier.

Branch and bound on uncovered edges with a matching lower bound and a
connectivity repair phase; exactness at desk scale is the contract, not
speed. This module is the ground truth that every reduction rule and
every lift map is validated against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexId

# Beyond these limits the exhaustive search may run essentially forever,
# so the solver declines instead of hanging.
_MAX_VERTICES_UNBOUNDED = 60
_MAX_VERTICES_DEEP = 40
_MAX_BUDGET_DEEP = 14


class TooLargeError(Exception):
    """Instance outside the exact solver's declared comfort zone."""


@dataclass(frozen=True)
class CoverCertificate:
    """A connected vertex cover witnessing the oracle's answer."""

    vertices: frozenset[VertexId]

    @property
    def size(self) -> int:
        return len(self.vertices)


def verify_cvc(g: Graph, s: set[VertexId] | frozenset[VertexId]) -> bool:
    """True iff s covers every edge of g and induces a connected subgraph.

    The empty set verifies exactly when g has no edges. Unknown vertex
    ids are rejected with KeyError.
    """
    for v in s:
        if v not in g:
            raise KeyError(f"solution vertex {v} is not in the graph")
    for u, w in g.edges():
        if u not in s and w not in s:
            return False
    return g.induced_is_connected(s)


def minimum_cvc(g: Graph, limit: int) -> CoverCertificate | None:
    """Smallest connected vertex cover of size <= limit, or None.

    Isolated vertices are ignored. When two or more components carry
    edges no connected set can cover both, so the answer is None for
    every limit. Raises TooLargeError instead of attempting instances
    where the exhaustive search would be unreasonable.
    """
    if limit < 0:
        return None
    edgeful = [c for c in g.connected_components() if len(c) > 1]
    if not edgeful:
        return CoverCertificate(frozenset())
    if len(edgeful) > 1:
        return None
    core = sorted(edgeful[0])
    _guard_size(len(core), limit)
    best = _branch_and_bound(g, core, min(limit, len(core)), first_hit=False)
    if best is None:
        return None
    return CoverCertificate(frozenset(best))


def decide_cvc(g: Graph, k: int) -> bool:
    """True iff g has a connected vertex cover of size at most k."""
    if k < 0:
        return False
    edgeful = [c for c in g.connected_components() if len(c) > 1]
    if not edgeful:
        return True
    if len(edgeful) > 1:
        return False
    core = sorted(edgeful[0])
    _guard_size(len(core), k)
    return _branch_and_bound(g, core, min(k, len(core)), first_hit=True) is not None


def _guard_size(n: int, budget: int) -> None:
    if n > _MAX_VERTICES_UNBOUNDED or (n > _MAX_VERTICES_DEEP and budget > _MAX_BUDGET_DEEP):
        raise TooLargeError(
            f"exact search declined: {n} vertices with budget {budget}"
        )


def _branch_and_bound(
    g: Graph,
    core: list[VertexId],
    limit: int,
    first_hit: bool,
) -> set[VertexId] | None:
    """Exhaustive search over connected vertex covers of the edgeful core.

    Branches on an uncovered edge (take one endpoint or the other); once
    everything is covered but the partial solution induces two or more
    components, branches on the neighbors of one component, which is
    complete because any connected superset must leave the component
    through one of them.
    """
    edges = g.edges()  # the core is the only component carrying edges
    adj = {v: g.neighbor_set(v) for v in core}
    best: list[set[VertexId] | None] = [None]
    best_size = [limit + 1]

    def matching_lower_bound(chosen: set[VertexId]) -> int:
        # Greedy matching on uncovered edges; any cover needs one new
        # vertex per matched edge, so this undercounts and is safe.
        used: set[VertexId] = set()
        count = 0
        for u, w in edges:
            if u in chosen or w in chosen or u in used or w in used:
                continue
            used.update((u, w))
            count += 1
        return count

    def search(chosen: set[VertexId]) -> bool:
        if len(chosen) >= best_size[0]:
            return False
        uncovered = None
        for u, w in edges:
            if u not in chosen and w not in chosen:
                uncovered = (u, w)
                break
        if uncovered is not None:
            if len(chosen) + max(1, matching_lower_bound(chosen)) >= best_size[0]:
                return False
            u, w = uncovered
            for pick in (u, w):
                chosen.add(pick)
                done = search(chosen)
                chosen.discard(pick)
                if done and first_hit:
                    return True
            return False

        comps = g.induced_components(chosen) if chosen else []
        if len(comps) <= 1:
            best[0] = set(chosen)
            best_size[0] = len(chosen)
            return True
        # One more vertex may merge every component at once (a common
        # neighbor), so only a +1 bound is sound here.
        if len(chosen) + 1 >= best_size[0]:
            return False
        comp = min(comps, key=min)
        frontier = sorted({w for v in comp for w in adj[v]} - chosen)
        for z in frontier:
            chosen.add(z)
            done = search(chosen)
            chosen.discard(z)
            if done and first_hit:
                return True
        return False

    search(set())
    return best[0]
