"""Composition of a source graph ``G`` into ``G'`` out of gadget copies.

Every vertex ``v`` of ``G`` becomes a copy ``H_v`` of the vertex gadget.  Every
edge ``uv`` becomes two copies of the edge gadget: the first copy's ``x1`` is
identified with port ``a_2p`` of ``H_u`` and the second copy's ``x1`` with
``a_2p+1``; their ``x2`` terminals land on ``a_2q+1`` and ``a_2q`` of ``H_v``.
Pair ``p`` at ``u`` is the position of ``v`` in the clockwise rotation at ``u``
of a planar embedding of ``G``, so the gadget copies follow the drawing and
the reversed order at ``v`` lets the two parallel copies nest.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from ..core.graph import Graph
from ..core.planarity import RotationSystem, is_planar, nonplanar_witness
from ..core.properties import find_triangle, max_degree
from ..gadgets.specs import EdgeGadgetSpec, VertexGadgetSpec
from ..gadgets.verify import verify_edge_gadget, verify_vertex_gadget


class ReductionRefused(ValueError):
    """A precondition of the reduction does not hold."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


class ReductionIntegrityError(RuntimeError):
    """The construction produced something its own invariants forbid."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class EdgeCopy:
    """One edge-gadget copy inside ``G'``.

    ``ids[w]`` is the ``G'`` vertex of edge-gadget vertex ``w``; ``port_u`` and
    ``port_v`` are the port indices its ``x1`` and ``x2`` are identified with.
    """

    edge: tuple[int, int]
    ids: tuple[int, ...]
    port_u: int
    port_v: int


@dataclass
class ReductionOutput:
    g: Graph
    h: VertexGadgetSpec
    e: EdgeGadgetSpec
    gprime: Graph
    vertex_offset: list[int]
    edge_map: dict[tuple[int, int], tuple[EdgeCopy, EdgeCopy]]
    pair_of: dict[tuple[int, int], int]
    embedding: RotationSystem | None = None
    owner: list[tuple[str, int]] = field(default_factory=list)

    @property
    def vertex_map(self) -> dict[int, tuple[int, int]]:
        """G-vertex -> (offset of its gadget copy, copy id)."""
        return {v: (off, v) for v, off in enumerate(self.vertex_offset)}

    def h_vertex(self, v: int, w: int) -> int:
        """``G'`` id of vertex ``w`` of ``H_v``."""
        return self.vertex_offset[v] + w

    def port(self, v: int, i: int) -> int:
        return self.h_vertex(v, self.h.ports[i])

    def copies(self) -> list[EdgeCopy]:
        return [c for pair in self.edge_map.values() for c in pair]

    def provenance(self) -> dict:
        return {
            "n_source": self.g.n,
            "source_edges": [list(e) for e in self.g.edge_list()],
            "vertex_gadget_n": self.h.graph.n,
            "edge_gadget_n": self.e.graph.n,
            "vertex_map": {str(v): {"offset": off, "copy": v} for v, off in enumerate(self.vertex_offset)},
            "edge_map": {f"{u}-{v}": [{"ids": list(c.ids), "port_u": c.port_u, "port_v": c.port_v}
                                      for c in pair] for (u, v), pair in sorted(self.edge_map.items())},
            "owner": [[kind, idx] for kind, idx in self.owner],
        }


@lru_cache(maxsize=16)
def _gadgets_certified(h: VertexGadgetSpec, e: EdgeGadgetSpec) -> tuple[bool, str]:
    er = verify_edge_gadget(e)
    if not er.all_pass:
        bad = [k for k, v in er.verdicts.items() if not v.passed]
        return False, f"edge gadget fails {bad}"
    hr = verify_vertex_gadget(h, compute_forced=False)
    if not hr.all_pass:
        bad = [k for k, v in hr.verdicts.items() if not v.passed]
        return False, f"vertex gadget fails {bad}"
    return True, ""


def check_preconditions(g: Graph, h: VertexGadgetSpec, e: EdgeGadgetSpec,
                        certify_gadgets: bool = True) -> RotationSystem:
    h.validate()
    e.validate()
    tri = find_triangle(g)
    if tri is not None:
        raise ReductionRefused("triangle-free", f"source graph contains triangle {list(tri)}")
    if max_degree(g) > 4:
        raise ReductionRefused("max-degree", f"source graph has maximum degree {max_degree(g)} > 4")
    for v in g.vertices():
        if g.degree(v) > h.pair_count:
            raise ReductionRefused("port-exhaustion",
                                   f"vertex {v} has degree {g.degree(v)} > {h.pair_count} port pairs")
    planar, rs = is_planar(g)
    if not planar:
        raise ReductionRefused("planar", "source graph is not planar")
    if certify_gadgets:
        ok, why = _gadgets_certified(h, e)
        if not ok:
            raise ReductionRefused("certified-gadgets", why)
    return rs


def reduce(g: Graph, h: VertexGadgetSpec, e: EdgeGadgetSpec, *, certify_gadgets: bool = True,
           check_planarity: bool = True) -> ReductionOutput:
    rs = check_preconditions(g, h, e, certify_gadgets)
    nh = h.graph.n
    offsets = [v * nh for v in g.vertices()]
    owner: list[tuple[str, int]] = [("H", v) for v in g.vertices() for _ in range(nh)]
    edges = [(offsets[v] + a, offsets[v] + b) for v in g.vertices() for a, b in h.graph.edge_list()]

    pair_of = {}
    for v in g.vertices():
        for k, u in enumerate(rs.rotation(v)):
            pair_of[(v, u)] = k

    ports = h.ports
    inner = [w for w in e.graph.vertices() if w not in (e.x1, e.x2)]
    nxt = g.n * nh
    edge_map = {}
    copy_no = 0
    for u, v in g.edge_list():
        p, q = pair_of[(u, v)], pair_of[(v, u)]
        pair = []
        for port_u, port_v in ((2 * p, 2 * q + 1), (2 * p + 1, 2 * q)):
            ids = [-1] * e.graph.n
            ids[e.x1] = offsets[u] + ports[port_u]
            ids[e.x2] = offsets[v] + ports[port_v]
            for w in inner:
                ids[w] = nxt
                nxt += 1
                owner.append(("E", copy_no))
            edges += [(ids[a], ids[b]) for a, b in e.graph.edge_list()]
            pair.append(EdgeCopy((u, v), tuple(ids), port_u, port_v))
            copy_no += 1
        edge_map[(u, v)] = tuple(pair)

    gprime = Graph(nxt, edges)
    out = ReductionOutput(g, h, e, gprime, offsets, edge_map, pair_of, None, owner)
    _check_structure(out)
    if check_planarity:
        ok, emb = is_planar(gprime)
        if not ok:
            raise ReductionIntegrityError("composed graph is not planar", nonplanar_witness(gprime))
        out.embedding = emb
    return out


def _check_structure(r: ReductionOutput) -> None:
    expected = r.g.n * r.h.graph.n + 2 * r.g.m * (r.e.graph.n - 2)
    if r.gprime.n != expected:
        raise ReductionIntegrityError(f"vertex count {r.gprime.n} != {expected}")
    if len(r.owner) != r.gprime.n:
        raise ReductionIntegrityError("ownership map does not cover G'")
    used: dict[tuple[int, int], tuple[int, int]] = {}
    for (u, v), (c1, c2) in r.edge_map.items():
        for end, pa, pb in ((u, c1.port_u, c2.port_u), (v, c1.port_v, c2.port_v)):
            if min(pa, pb) % 2 or abs(pa - pb) != 1:
                raise ReductionIntegrityError(f"identification ({pa}, {pb}) at vertex {end} breaks the pair rule")
            key = (end, min(pa, pb))
            if key in used:
                raise ReductionIntegrityError(f"port pair {key[1] // 2} of vertex {end} used twice")
            used[key] = (u, v)
    dmax = max_degree(r.gprime)
    if dmax > 4:
        raise ReductionIntegrityError(f"composed graph has maximum degree {dmax}")
