"""matching: blossom correctness against the exhaustive matcher."""

from __future__ import annotations

from planarcvc.generators import gen_random_planar
from planarcvc.matching import matching_bound_holds, maximum_matching

from brute import brute_matching_size
from conftest import (
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_petersen,
    make_random_graph,
)


def test_path4():
    assert maximum_matching(make_path(4)).size == 2


def test_triangle():
    assert maximum_matching(make_cycle(3)).size == 1


def test_petersen():
    g = make_petersen()
    assert brute_matching_size(g) == 5  # the frozen oracle value
    m = maximum_matching(g)
    m.validate(g)
    assert m.size == 5


def test_odd_cycles_force_blossoms():
    for n in (3, 5, 7, 9, 11):
        assert maximum_matching(make_cycle(n)).size == n // 2


def test_specials_match_bruteforce():
    for g in (
        make_complete(6),
        make_complete(7),
        make_complete_bipartite(3, 5),
        make_petersen(),
    ):
        m = maximum_matching(g)
        m.validate(g)
        assert m.size == brute_matching_size(g)


def test_random_graphs_match_bruteforce():
    for i in range(150):
        n = 2 + i % 11
        p = (0.15, 0.3, 0.5, 0.8)[i % 4]
        g = make_random_graph(n, p, 300 + i)
        m = maximum_matching(g)
        m.validate(g)
        assert m.size == brute_matching_size(g), f"graph seed {300 + i}"


def test_matching_bound_vacuous_on_paths():
    assert matching_bound_holds(make_path(6))


def test_matching_bound_on_k4():
    assert matching_bound_holds(make_complete(4))


def test_matching_bound_min_degree_three_stronger_bound():
    # Full triangulations have minimum degree 3, where the planar matching
    # bound sharpens to (n + 2) / 3.
    for i in range(25):
        n = 4 + (i * 2) % 30
        g = gen_random_planar(n, 1.0, 500 + i)
        assert min(g.degree(v) for v in g.vertices()) >= 3
        m = maximum_matching(g)
        assert 3 * m.size >= n + 2


def test_matching_bound_on_planar_corpus():
    for i in range(60):
        n = 4 + (i * 5) % 40
        g = gen_random_planar(n, (0.5, 0.8, 1.0)[i % 3], 9100 + i)
        assert matching_bound_holds(g)
