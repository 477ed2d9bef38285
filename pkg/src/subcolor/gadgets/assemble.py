"""Constructive edge and vertex gadgets.

The edge gadget is a wheel on a 4-cycle (hub ``0``, rim ``1 2 3 4``) with two
pendant paths ``z1 - y1 - x1`` and ``z2 - y2 - x2`` hung on opposite rim
vertices.  In every 2-subcolouring of the wheel the opposite rim vertices
differ and are saturated.

The vertex gadget is assembled from two pieces of an edge gadget:

* a *link*, ``E - {x1, x2}``, joined to consecutive ports ``a_i``, ``a_i+1``
  through ``y1`` and ``y2``.  When the two ports agree, the link saturates
  exactly one of them.
* a *core*, ``E - {x1, x2, y1, y2}``, joined to two vertices through ``z1``
  and ``z2``.  Since ``z1``, ``z2`` are saturated inside the core and differ,
  the two attached vertices are forced to differ.

Ports on a path of links, plus cores tying every port to a hub of the opposite
colour, give the vertex gadget: all ports agree, the ``2k - 1`` links saturate
``2k - 1`` distinct ports, and any single port can be the one left over.
"""
from __future__ import annotations

from ..core.graph import Graph
from .specs import EdgeGadgetSpec, VertexGadgetSpec

# ports (by index) tied to each hub; every hub has degree <= 4 and every port
# ends up with internal degree <= 3
HUB_PLANS: dict[int, tuple[tuple[int, ...], ...]] = {
    3: ((0, 1, 2, 3), (0, 4, 5)),
    4: ((0, 1, 2, 3), (4, 5, 6, 7), (0, 7)),
}


def w4_edge_gadget() -> EdgeGadgetSpec:
    hub, rim = 0, (1, 2, 3, 4)
    edges = [(hub, r) for r in rim] + [(rim[i], rim[(i + 1) % 4]) for i in range(4)]
    z1, z2, y1, y2, x1, x2 = 1, 3, 5, 6, 7, 8
    edges += [(z1, y1), (z2, y2), (y1, x1), (y2, x2)]
    return EdgeGadgetSpec(Graph(9, edges), x1=x1, x2=x2, y1=y1, y2=y2, z1=z1, z2=z2)


class _Builder:
    def __init__(self):
        self.n = 0
        self.edges: list[tuple[int, int]] = []

    def new(self) -> int:
        self.n += 1
        return self.n - 1

    def paste(self, g: Graph, keep: list[int]) -> dict[int, int]:
        """Copy ``g`` induced on ``keep``; returns old id -> new id."""
        ids = {v: self.new() for v in keep}
        self.edges += [(ids[u], ids[v]) for u, v in g.edge_list() if u in ids and v in ids]
        return ids


def assemble_vertex_gadget(e: EdgeGadgetSpec, pair_count: int) -> VertexGadgetSpec:
    if pair_count not in HUB_PLANS:
        raise ValueError(f"no assembly plan for {pair_count} port pairs; supported: {sorted(HUB_PLANS)}")
    e.validate()
    g = e.graph
    link_part = [v for v in g.vertices() if v not in (e.x1, e.x2)]
    core_part = [v for v in link_part if v not in (e.y1, e.y2)]
    b = _Builder()
    ports = [b.new() for _ in range(2 * pair_count)]
    for i in range(len(ports) - 1):
        ids = b.paste(g, link_part)
        b.edges += [(ports[i], ids[e.y1]), (ports[i + 1], ids[e.y2])]
    for plan in HUB_PLANS[pair_count]:
        hub = b.new()
        for p in plan:
            ids = b.paste(g, core_part)
            b.edges += [(ports[p], ids[e.z1]), (hub, ids[e.z2])]
    pairs = tuple((ports[2 * i], ports[2 * i + 1]) for i in range(pair_count))
    return VertexGadgetSpec(Graph(b.n, b.edges), tuple(ports), pairs)
