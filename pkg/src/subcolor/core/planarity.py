"""Planarity testing with a combinatorial embedding witness."""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import Graph


@dataclass(frozen=True)
class RotationSystem:
    """Clockwise cyclic order of neighbours around every vertex."""

    order: tuple[tuple[int, ...], ...]

    def rotation(self, v: int) -> tuple[int, ...]:
        return self.order[v]

    def successor(self, v: int, u: int) -> int:
        """Neighbour following ``u`` clockwise around ``v``."""
        rot = self.order[v]
        return rot[(rot.index(u) + 1) % len(rot)]

    def faces(self) -> list[list[tuple[int, int]]]:
        """Face boundaries as lists of darts ``(u, v)``."""
        pos = [{u: i for i, u in enumerate(rot)} for rot in self.order]
        seen = set()
        faces = []
        for v, rot in enumerate(self.order):
            for u in rot:
                if (v, u) in seen:
                    continue
                face = []
                dart = (v, u)
                while dart not in seen:
                    seen.add(dart)
                    face.append(dart)
                    a, b = dart
                    rb = self.order[b]
                    # next dart leaves b right after a in clockwise order
                    dart = (b, rb[(pos[b][a] + 1) % len(rb)])
                faces.append(face)
        return faces

    def is_consistent_with(self, g: Graph) -> bool:
        if len(self.order) != g.n:
            return False
        return all(sorted(self.order[v]) == sorted(g.neighbors(v)) and
                   len(set(self.order[v])) == len(self.order[v]) for v in g.vertices())


def euler_check(g: Graph, rs: RotationSystem) -> bool:
    """True iff every connected component satisfies V - E + F = 2 under ``rs``."""
    if not rs.is_consistent_with(g):
        return False
    comp_of = [0] * g.n
    comps = g.components()
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    faces = [0] * len(comps)
    for face in rs.faces():
        faces[comp_of[face[0][0]]] += 1
    edges = [0] * len(comps)
    for u, _ in g.edges:
        edges[comp_of[u]] += 1
    for i, comp in enumerate(comps):
        f = faces[i] if edges[i] else 1
        if len(comp) - edges[i] + f != 2:
            return False
    return True


def count_faces(g: Graph, rs: RotationSystem) -> int:
    """Faces of the whole plane drawing (the outer face counted once)."""
    comps = g.components()
    traced = len(rs.faces()) + sum(1 for c in comps if len(c) == 1)
    return traced - (len(comps) - 1)


def is_planar(g: Graph) -> tuple[bool, RotationSystem | None]:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(nxg)
    if not ok:
        return False, None
    order = tuple(tuple(emb.neighbors_cw_order(v)) if g.degree(v) else () for v in range(g.n))
    rs = RotationSystem(order)
    if not euler_check(g, rs):
        raise AssertionError("planarity routine returned an embedding failing the Euler check")
    return True, rs


def nonplanar_witness(g: Graph) -> list[tuple[int, int]] | None:
    """Edges of a Kuratowski subgraph when ``g`` is not planar."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    ok, cert = nx.check_planarity(nxg, counterexample=True)
    if ok:
        return None
    return sorted((min(u, v), max(u, v)) for u, v in cert.edges())
