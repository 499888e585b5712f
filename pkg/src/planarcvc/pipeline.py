"""Kernelization pipeline: phases 1-3, journal replay and solution lifting.

kernelize runs Phase 1 to a fixpoint, embeds once, runs Phase 2, then
applies the size gate 3*|V| <= 11*k in exact integer arithmetic. Every
graph modification is journaled; lift_solution undoes the journal in
reverse, mapping a connected vertex cover of the kernel back to one of
the original instance without exceeding the spent budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .embedding import NonPlanarGraphError, embed
from .facematch import apply_identification, run_phase2
from .graph import Graph, VertexId
from .oracle import verify_cvc
from .reductions import ReductionStep, RuleId, apply_rule, run_phase1


class NonPlanarInputError(Exception):
    """kernelize was handed a graph with no planar embedding."""


@dataclass(frozen=True)
class Instance:
    """A graph paired with the solution-size budget k."""

    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"budget must be non-negative, got {self.k}")


class NoReason(Enum):
    SIZE_GATE = "size-gate"
    BUDGET_UNDERFLOW = "budget-underflow"
    MULTI_EDGE_COMPONENTS = "multi-edge-components"


@dataclass
class ReductionJournal:
    """Everything needed to replay the reduction and lift solutions back.

    Replaying: strip the isolated vertices of the input, then apply the
    steps in order. Fresh ids allocated during replay coincide with the
    recorded ones because allocation is deterministic.
    """

    input_graph: Graph
    dropped_isolated: tuple[VertexId, ...]
    steps: list[ReductionStep] = field(default_factory=list)

    @property
    def k_spent(self) -> int:
        return -sum(s.k_delta for s in self.steps)


@dataclass
class Kernel:
    instance: Instance
    journal: ReductionJournal


@dataclass
class No:
    reason: NoReason


KernelOutcome = Kernel | No


def check_size_bound(n_vertices: int, k: int) -> bool:
    """The Phase 3 gate: true iff 3 * n_vertices <= 11 * k."""
    return 3 * n_vertices <= 11 * k


def kernelize(inst: Instance) -> KernelOutcome:
    """Reduce an instance to an equivalent one with at most 11/3*k vertices.

    Isolated vertices are dropped up front. Inputs where two or more
    components carry an edge are NO instances outright (no connected set
    can cover both); an edgeless input is a YES instance with the empty
    cover and kernelizes to the empty graph.
    """
    work = inst.graph.copy()
    dropped = tuple(work.isolated_vertices())
    for v in dropped:
        work.remove_vertex(v)

    journal = ReductionJournal(
        input_graph=inst.graph.copy(), dropped_isolated=dropped
    )
    if work.n_vertices == 0:
        return Kernel(Instance(work, inst.k), journal)
    if not work.is_connected():
        return No(NoReason.MULTI_EDGE_COMPONENTS)

    phase1 = run_phase1(work, inst.k)
    if phase1.early_no:
        return No(NoReason.BUDGET_UNDERFLOW)
    g1, k1 = phase1.graph, phase1.k

    try:
        embedding = embed(g1)
    except NonPlanarGraphError as exc:
        raise NonPlanarInputError(str(exc)) from exc

    phase2_steps = run_phase2(g1, embedding)
    journal.steps = list(phase1.steps) + phase2_steps

    if not check_size_bound(g1.n_vertices, k1):
        return No(NoReason.SIZE_GATE)
    return Kernel(Instance(g1, k1), journal)


# ----------------------------------------------------------------------
# replay
# ----------------------------------------------------------------------


def replay_journal(journal: ReductionJournal) -> list[Graph]:
    """Reproduce the graph after every journal step.

    Returns snapshots[0] = input minus isolated vertices and
    snapshots[t] = graph after step t; verifies along the way that the
    replayed steps realize exactly the recorded ids.
    """
    g = journal.input_graph.copy()
    for v in journal.input_graph.isolated_vertices():
        g.remove_vertex(v)
    snapshots = [g.copy()]
    for step in journal.steps:
        realized = _replay_step(g, step)
        if (realized.created, realized.removed, realized.k_delta) != (
            step.created, step.removed, step.k_delta
        ):
            raise ValueError(f"journal replay diverged at step {step}")
        snapshots.append(g.copy())
    return snapshots


def _replay_step(g: Graph, step: ReductionStep) -> ReductionStep:
    if step.rule is RuleId.R8:
        return apply_identification(
            g, step.site["u"], step.site["v"], step.site["face"]
        )
    _, realized = apply_rule(g, 0, step.rule, step.site)
    return realized


# ----------------------------------------------------------------------
# lifting
# ----------------------------------------------------------------------


def lift_solution(
    journal: ReductionJournal, kernel_solution: set[VertexId]
) -> set[VertexId]:
    """Map a connected vertex cover of the kernel back to the input graph.

    Undoes the journal steps in reverse order, applying one lift map per
    rule. The result grows by at most the budget each step spent, i.e.
    |result| <= |kernel_solution| + sum of -k_delta over the steps.
    """
    snapshots = replay_journal(journal)
    kernel = snapshots[-1]
    sol = set(kernel_solution)
    if not verify_cvc(kernel, sol):
        raise ValueError("kernel solution is not a connected vertex cover")

    for idx in range(len(journal.steps) - 1, -1, -1):
        step = journal.steps[idx]
        post = snapshots[idx + 1]
        sol = _lift_step(step, post, sol)

    if not verify_cvc(journal.input_graph, sol):
        raise AssertionError("lifted solution failed verification; lift map bug")
    return sol


def _normalize_pendant(
    sol: set[VertexId], pendant: VertexId, parent: VertexId
) -> None:
    """Replace a pendant in the solution by its parent.

    Safe because a pendant is a leaf of the induced subgraph (dropping it
    keeps connectivity) and its parent dominates it (covers a superset of
    edges, including the pendant edge itself).
    """
    if pendant in sol:
        sol.discard(pendant)
        sol.add(parent)


def _lift_step(
    step: ReductionStep, post: Graph, sol: set[VertexId]
) -> set[VertexId]:
    site = step.site
    rule = step.rule

    if rule is RuleId.R1:
        # Extra pendants reappear; the parent covers all of them.
        _normalize_pendant(sol, site["keep"], site["v"])
        return sol

    if rule is RuleId.R2:
        # Undo the uw contraction; u-w is an edge, so both sides reconnect.
        _normalize_pendant(sol, site["v"], site["c"])
        assert site["c"] in sol
        sol.discard(site["c"])
        sol.update((site["u"], site["w"]))
        return sol

    if rule is RuleId.R3:
        if site["cut"]:
            # Undo the uv contraction; v rejoins u to the w side.
            if site["c"] in sol:
                sol.discard(site["c"])
                sol.update((site["u"], site["v"]))
            else:
                sol.add(site["v"])
            return sol
        # Non-cut branch: the fresh pendants forced u and w into the cover.
        _normalize_pendant(sol, site["pu"], site["u"])
        _normalize_pendant(sol, site["pw"], site["w"])
        assert site["u"] in sol and site["w"] in sol
        return sol

    if rule is RuleId.R4:
        _normalize_pendant(sol, site["pv"], site["c"])
        assert site["c"] in sol
        sol.discard(site["c"])
        sol.update((site["u"], site["v"]))
        return sol

    if rule is RuleId.R5:
        # v reconnects x and y even when the helper edge xy vanishes.
        sol.add(site["v"])
        return sol

    if rule is RuleId.R6:
        _normalize_pendant(sol, site["px"], site["x"])
        _normalize_pendant(sol, site["pv"], site["v"])
        _normalize_pendant(sol, site["py"], site["y"])
        assert {site["x"], site["v"], site["y"]} <= sol
        return sol

    if rule is RuleId.R7:
        _normalize_pendant(sol, site["px"], site["x"])
        _normalize_pendant(sol, site["py"], site["y"])
        assert site["x"] in sol and site["y"] in sol
        sol.add(site["v"])
        return sol

    if rule is RuleId.R8:
        return _lift_identification(step, post, sol)

    raise AssertionError(f"unknown rule {rule}")


def _lift_identification(
    step: ReductionStep, post: Graph, sol: set[VertexId]
) -> set[VertexId]:
    """Undo one pendant identification (the inverse of the 2-vertex rules).

    The merged 2-vertex c has neighbors u and v. When the solution leans
    on c for connectivity, one replacement vertex adjacent to both halves
    always exists because c is not a cut vertex of the merged graph.
    """
    u, v, c = step.site["u"], step.site["v"], step.site["c"]
    if c not in sol:
        assert u in sol and v in sol
        return sol

    sol.discard(c)
    u_in, v_in = u in sol, v in sol
    if not u_in and not v_in:
        raise AssertionError("merged 2-vertex alone cannot be a cover of a connected graph")
    if u_in != v_in:
        # c was a leaf of the induced cover; re-cover the missing owner's
        # pendant by taking the owner itself.
        sol.add(v if u_in else u)
        return sol

    comps = post.induced_components(sol)
    if len(comps) <= 1:
        return sol
    assert len(comps) == 2, "a 2-vertex splits its cover into at most two parts"
    comp_u = comps[0] if u in comps[0] else comps[1]
    comp_v = comps[0] if v in comps[0] else comps[1]
    assert comp_u is not comp_v
    for z in post.vertices():
        if z == c or z in sol:
            continue
        nbrs = post.neighbor_set(z)
        if nbrs & comp_u and nbrs & comp_v:
            sol.add(z)
            return sol
    raise AssertionError("no reconnecting vertex found; upstream bug")


# ----------------------------------------------------------------------
# statistics and property checkers
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """The (S1, S>=3, I1, I3, I>=4) decomposition relative to a cover."""

    s1: frozenset[VertexId]
    s_ge3: frozenset[VertexId]
    i1: frozenset[VertexId]
    i3: frozenset[VertexId]
    i_ge4: frozenset[VertexId]

    def sizes(self) -> dict[str, int]:
        return {
            "S1": len(self.s1),
            "S>=3": len(self.s_ge3),
            "I1": len(self.i1),
            "I3": len(self.i3),
            "I>=4": len(self.i_ge4),
        }


def partition_stats(g: Graph, cover: set[VertexId]) -> Partition:
    """Partition V(g) relative to a connected vertex cover.

    Non-cover vertices of degree 0 or 2 cannot occur in a reduced graph,
    so they are reported as a consistency error rather than classified.
    """
    cover = set(cover)
    if not verify_cvc(g, cover):
        raise ValueError("partition_stats requires a connected vertex cover")
    i1, i3, i_ge4 = set(), set(), set()
    for v in g.vertices():
        if v in cover:
            continue
        d = g.degree(v)
        if d == 1:
            i1.add(v)
        elif d == 3:
            i3.add(v)
        elif d >= 4:
            i_ge4.add(v)
        else:
            raise ValueError(
                f"non-cover vertex {v} has degree {d}; graph is not reduced"
            )
    s1 = {v for v in cover if any(w in i1 for w in g.neighbors(v))}
    return Partition(
        s1=frozenset(s1),
        s_ge3=frozenset(cover - s1),
        i1=frozenset(i1),
        i3=frozenset(i3),
        i_ge4=frozenset(i_ge4),
    )


def partition_bound_holds(g1: Graph, cover: set[VertexId], m_star: int) -> bool:
    """Checker for |S>=3| + |I>=4| + |M*| >= |S| / 3 on a Phase 1 fixpoint.

    This inequality is a theorem when cover is a minimum connected vertex
    cover and every cover vertex has degree >= 3, so False indicates a
    pipeline bug, not a property of the input. The one reduced graph where
    the degree hypothesis fails is the single edge, which is trivially
    fine (2 vertices against a bound of 11/3).
    """
    if g1.n_vertices == 2 and g1.n_edges == 1:
        return True
    part = partition_stats(g1, cover)
    return 3 * (len(part.s_ge3) + len(part.i_ge4) + m_star) >= len(cover)
