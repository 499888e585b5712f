"""graph-core: mutation, contraction, connectivity queries."""

from __future__ import annotations

import random

import pytest

from planarcvc.graph import Graph, graph_from_edges

from conftest import make_cycle, make_path, make_star


def test_contract_triangle_collapses_parallels():
    g = graph_from_edges([(1, 2), (2, 3), (1, 3)])  # u=1, v=3, w=2
    c = g.contract_edge(1, 2)
    assert g.vertices() == [3, c]
    assert g.edges() == [(3, c)]


def test_contract_path_drops_loop():
    g = make_path(3)  # u=1 - w=2 - x=3
    c = g.contract_edge(1, 2)
    assert g.edges() == [(3, c)]


def test_contract_c4_gives_triangle():
    # Hand-enumerated: contracting ab in a-b-c-d-a leaves {c', c, d} with
    # the three edges c'c, c'd, cd.
    g = make_cycle(4)
    c = g.contract_edge(1, 2)
    assert g.n_vertices == 3
    assert g.edges() == [(3, 4), (3, c), (4, c)]


def test_contract_requires_edge():
    g = make_path(3)
    with pytest.raises(ValueError):
        g.contract_edge(1, 3)


def test_contract_counts_random():
    rng = random.Random(11)
    for trial in range(50):
        n = rng.randint(2, 12)
        g = Graph()
        verts = [g.add_vertex() for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.4:
                    g.add_edge(verts[i], verts[j])
        edges = g.edges()
        if not edges:
            continue
        u, w = edges[rng.randrange(len(edges))]
        before_v, before_e = g.n_vertices, g.n_edges
        g.contract_edge(u, w)
        g.validate()
        assert g.n_vertices == before_v - 1
        assert g.n_edges <= before_e


def test_is_connected():
    assert graph_from_edges([(1, 2)]).is_connected()
    assert not graph_from_edges([(1, 2), (3, 4)]).is_connected()
    assert Graph().is_connected()
    lone = Graph()
    lone.add_vertex()
    assert lone.is_connected()


def test_cut_vertices_path_and_triangle():
    path = make_path(3)
    assert path.is_cut_vertex(2)
    assert not path.is_cut_vertex(1)
    tri = make_cycle(3)
    assert all(not tri.is_cut_vertex(v) for v in tri.vertices())


def test_cut_vertex_rejects_disconnected():
    g = graph_from_edges([(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        g.is_cut_vertex(1)


def test_pendant_neighbors():
    star = make_star(3)
    assert star.pendant_neighbors(1) == {2, 3, 4}
    tri = make_cycle(3)
    assert tri.pendant_neighbors(1) == set()


def test_vertex_ids_never_reused():
    g = Graph()
    a = g.add_vertex()
    b = g.add_vertex()
    g.remove_vertex(b)
    c = g.add_vertex()
    assert c != b and c > b > a


def test_copy_preserves_allocation_state():
    g = graph_from_edges([(1, 2), (2, 3)])
    h = g.copy()
    assert g.add_vertex() == h.add_vertex()


def test_simplicity_invariants_random_ops():
    rng = random.Random(5)
    g = Graph()
    verts = [g.add_vertex() for _ in range(8)]
    for _ in range(200):
        op = rng.random()
        live = g.vertices()
        if op < 0.45 and len(live) >= 2:
            u, w = rng.sample(live, 2)
            if not g.has_edge(u, w):
                g.add_edge(u, w)
        elif op < 0.6 and g.n_edges:
            edges = g.edges()
            g.remove_edge(*edges[rng.randrange(len(edges))])
        elif op < 0.75 and g.n_edges:
            edges = g.edges()
            g.contract_edge(*edges[rng.randrange(len(edges))])
        elif op < 0.9:
            g.add_vertex()
        elif live:
            g.remove_vertex(rng.choice(live))
        g.validate()


def test_cut_vertex_matches_component_count():
    rng = random.Random(23)
    for trial in range(30):
        n = rng.randint(3, 10)
        g = make_path(n)
        for _ in range(rng.randint(0, n)):
            u, w = rng.sample(g.vertices(), 2)
            if not g.has_edge(u, w):
                g.add_edge(u, w)
        for v in g.vertices():
            remaining = [x for x in g.vertices() if x != v]
            comps = len(g.induced_components(remaining))
            assert g.is_cut_vertex(v) == (comps > 1)
