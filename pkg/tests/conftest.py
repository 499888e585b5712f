"""Shared fixtures: small named graphs and the seeded random corpora."""

from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from planarcvc.graph import Graph, graph_from_edges
from planarcvc.generators import gen_random_planar


def make_path(n: int) -> Graph:
    return graph_from_edges((i, i + 1) for i in range(1, n))


def make_cycle(n: int) -> Graph:
    return graph_from_edges(
        [(i, i + 1) for i in range(1, n)] + [(1, n)]
    )


def make_complete(n: int) -> Graph:
    return graph_from_edges(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
    )


def make_complete_bipartite(a: int, b: int) -> Graph:
    return graph_from_edges(
        (i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)
    )


def make_star(leaves: int) -> Graph:
    return graph_from_edges((1, 1 + i) for i in range(1, leaves + 1))


def make_petersen() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i + 1, (i + 1) % 5 + 1))       # outer cycle
        edges.append((i + 1, i + 6))                 # spokes
        edges.append((i + 6, (i + 2) % 5 + 6))       # inner pentagram
    return graph_from_edges(edges)


def make_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi style graph, not necessarily planar or connected."""
    rng = random.Random(seed)
    g = Graph()
    verts = [g.add_vertex() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                g.add_edge(verts[i], verts[j])
    return g


def small_planar_corpus(count: int, max_n: int = 16, seed: int = 2024):
    """Seeded connected planar instances for the equivalence suites."""
    rng = random.Random(seed)
    corpus = []
    for i in range(count):
        n = rng.randint(4, max_n)
        density = rng.choice([0.4, 0.55, 0.7, 0.85, 1.0])
        corpus.append(gen_random_planar(n, density, seed * 1000 + i))
    return corpus


@pytest.fixture(scope="session")
def corpus_small():
    return small_planar_corpus(120)


@pytest.fixture(scope="session")
def corpus_acceptance():
    return small_planar_corpus(500, seed=4099)
