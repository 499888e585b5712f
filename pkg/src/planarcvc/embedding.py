"""Planarity testing and combinatorial embeddings (rotation systems).

The planarity test itself is delegated to networkx (left-right algorithm);
face enumeration and the embedding sanity checks are implemented here on
top of the rotation system it returns. Face orientation follows one fixed
convention: the edge after (u, v) on a boundary walk is (v, w) where w is
the cyclic successor of u in the rotation at v. Only the consistency of
this convention matters, not geometric clockwiseness.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph, VertexId


class NonPlanarGraphError(Exception):
    """Raised when an embedding is requested for a non-planar graph."""


@dataclass(frozen=True)
class Face:
    """One face of an embedding.

    boundary: the closed walk as a tuple of directed edges.
    incident_vertices: vertices in first-encounter order along the walk
    (a vertex may occur several times on the boundary but appears once here).
    """

    boundary: tuple[tuple[VertexId, VertexId], ...]
    incident_vertices: tuple[VertexId, ...]


@dataclass(frozen=True)
class Embedding:
    """Rotation system plus the face list it induces."""

    rotation: dict[VertexId, tuple[VertexId, ...]]
    faces: tuple[Face, ...]
    n_vertices: int
    n_edges: int


def embed(g: Graph) -> Embedding:
    """Compute a planar embedding of a connected graph.

    Raises NonPlanarGraphError when no planar embedding exists and
    ValueError on empty or disconnected input.
    """
    if g.n_vertices == 0:
        raise ValueError("cannot embed the empty graph")
    if not g.is_connected():
        raise ValueError("embed requires a connected graph")

    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges())
    is_planar, planar_emb = nx.check_planarity(nxg)
    if not is_planar:
        raise NonPlanarGraphError(
            f"graph with {g.n_vertices} vertices / {g.n_edges} edges is not planar"
        )

    data = planar_emb.get_data()
    rotation = {v: tuple(data.get(v, ())) for v in g.vertices()}
    faces = _trace_faces(rotation, g.vertices())
    return Embedding(
        rotation=rotation,
        faces=faces,
        n_vertices=g.n_vertices,
        n_edges=g.n_edges,
    )


def is_planar(g: Graph) -> bool:
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices())
    nxg.add_edges_from(g.edges())
    return nx.check_planarity(nxg)[0]


def enumerate_faces(e: Embedding) -> list[Face]:
    """Re-derive the face list from the rotation system."""
    return list(_trace_faces(e.rotation, sorted(e.rotation)))


def _trace_faces(
    rotation: dict[VertexId, tuple[VertexId, ...]],
    vertices: list[VertexId],
) -> tuple[Face, ...]:
    # Positions of every neighbor within each rotation, for O(1) successor lookup.
    pos = {v: {w: i for i, w in enumerate(rot)} for v, rot in rotation.items()}

    darts = sorted((u, w) for u in vertices for w in rotation[u])
    if not darts:
        # Edgeless connected graph is a single vertex: one face around it.
        return (Face(boundary=(), incident_vertices=tuple(vertices)),)

    faces = []
    visited: set[tuple[VertexId, VertexId]] = set()
    for start in darts:
        if start in visited:
            continue
        walk = []
        cur = start
        while cur not in visited:
            visited.add(cur)
            walk.append(cur)
            u, v = cur
            rot = rotation[v]
            cur = (v, rot[(pos[v][u] + 1) % len(rot)])
        assert cur == start, "face walk did not close on its starting edge"
        seen_first: list[VertexId] = []
        for u, _ in walk:
            if u not in seen_first:
                seen_first.append(u)
        faces.append(Face(boundary=tuple(walk), incident_vertices=tuple(seen_first)))
    return tuple(faces)


def check_embedding(e: Embedding) -> None:
    """Euler formula and face double-cover checks; raises AssertionError."""
    total = sum(len(f.boundary) for f in e.faces)
    assert total == 2 * e.n_edges, (
        f"double cover broken: boundary lengths sum to {total}, expected {2 * e.n_edges}"
    )
    euler = e.n_vertices - e.n_edges + len(e.faces)
    assert euler == 2, f"Euler formula broken: V-E+F = {euler}"
    darts = {(u, w) for u in e.rotation for w in e.rotation[u]}
    covered = [d for f in e.faces for d in f.boundary]
    assert len(covered) == len(set(covered)), "a directed edge lies on two faces"
    assert set(covered) == darts or (not darts and len(e.faces) == 1), (
        "face boundaries do not cover every directed edge"
    )
