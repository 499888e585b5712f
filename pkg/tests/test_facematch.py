"""face-matching: aux graph, per-face rematch, the R8 loop."""

from __future__ import annotations

from planarcvc.embedding import embed, is_planar
from planarcvc.facematch import (
    apply_identification,
    build_aux_graph,
    pendant_owners,
    planarize_matching,
    run_phase2,
)
from planarcvc.generators import gen_exception_graph, gen_tightness
from planarcvc.graph import graph_from_edges
from planarcvc.matching import Matching, maximum_matching
from planarcvc.oracle import decide_cvc
from planarcvc.reductions import RuleId, run_phase1

from conftest import make_cycle, small_planar_corpus


def test_aux_graph_without_pendants_is_empty():
    g = make_cycle(5)
    aux = build_aux_graph(g, embed(g))
    assert aux.vertices == () and aux.edges == frozenset()


def test_aux_graph_c4_opposite_pendants():
    # Not a Phase 1 fixpoint, but the construction still works: corners 1
    # and 3 share both square faces, giving exactly one aux edge.
    g = make_cycle(4)
    for corner in (1, 3):
        p = g.add_vertex()
        g.add_edge(corner, p)
    aux = build_aux_graph(g, embed(g))
    assert aux.vertices == (1, 3)
    assert aux.edges == frozenset({(1, 3)})


def test_aux_graph_tightness_edges_touch_the_ring():
    g = gen_tightness(3)
    aux = build_aux_graph(g, embed(g))
    ring = {w for w in g.vertices() if g.degree(w) == 7}  # shared ring vertices
    assert len(ring) == 3
    assert aux.edges, "the ring family must allow identifications"
    for u, w in aux.edges:
        assert u in ring or w in ring


def test_isolated_edge_has_no_owners():
    g = graph_from_edges([(1, 2)])
    assert pendant_owners(g) == []


def test_planarize_empty():
    g = make_cycle(4)
    out = planarize_matching(Matching(), embed(g))
    assert out.pairs == ()


def test_planarize_uncrosses_within_a_face():
    # C8 with pendants on alternate corners: all four owners share the two
    # cycle faces, and a deliberately crossing matching gets re-paired
    # consecutively along the face order without changing its size.
    g = make_cycle(8)
    for corner in (1, 3, 5, 7):
        p = g.add_vertex()
        g.add_edge(corner, p)
    e = embed(g)
    m0 = Matching(edges=frozenset({(1, 5), (3, 7)}))
    out = planarize_matching(m0, e)
    assert out.size == 2
    face_ids = {fid for _, _, fid in out.pairs}
    assert len(face_ids) == 1
    face = e.faces[face_ids.pop()]
    order = [v for v in face.incident_vertices if v in {1, 3, 5, 7}]
    expected = {frozenset(order[0:2]), frozenset(order[2:4])}
    assert {frozenset((u, w)) for u, w, _ in out.pairs} == expected


def test_planarize_preserves_count_on_random_fixpoints():
    for g in small_planar_corpus(25, max_n=14, seed=777):
        fixed = run_phase1(g, g.n_vertices).graph
        e = embed(fixed)
        aux = build_aux_graph(fixed, e)
        if not aux.edges:
            continue
        m0 = maximum_matching(aux.to_graph())
        out = planarize_matching(m0, e)
        assert out.size == m0.size


def test_identification_merges_pendants():
    g = make_cycle(4)
    pend = {}
    for corner in (1, 3):
        p = g.add_vertex()
        g.add_edge(corner, p)
        pend[corner] = p
    step = apply_identification(g, 1, 3)
    assert step.rule is RuleId.R8
    assert set(step.removed) == set(pend.values())
    c = step.created[0]
    assert g.neighbors(c) == [1, 3]
    assert g.degree(c) == 2


def test_phase2_tightness_counts():
    for copies in (3, 4):
        g = gen_tightness(copies)
        steps = run_phase2(g)
        assert len(steps) == copies
        assert g.n_vertices == 11 * copies + 2


def test_phase2_exception_graph_unchanged():
    g = gen_exception_graph()
    before = g.edges()
    assert run_phase2(g) == []
    assert g.edges() == before


def test_phase2_single_owner_unchanged():
    g = make_cycle(4)
    p = g.add_vertex()
    g.add_edge(1, p)
    assert run_phase2(g) == []


def test_phase2_steps_consume_valid_pendant_pairs(corpus_small):
    for g in corpus_small[:40]:
        fixed = run_phase1(g, g.n_vertices).graph
        before = fixed.copy()
        steps = run_phase2(fixed)
        for step in steps:
            u, v = step.site["u"], step.site["v"]
            assert not before.has_edge(u, v)
            assert step.site["xu"] != step.site["xv"]
        assert is_planar(fixed)


def test_phase2_preserves_decision(corpus_small):
    for g in corpus_small[:25]:
        fixed = run_phase1(g, g.n_vertices).graph
        before = fixed.copy()
        run_phase2(fixed)
        for k in range(0, before.n_vertices + 1):
            assert decide_cvc(before, k) == decide_cvc(fixed, k)
