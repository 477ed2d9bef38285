"""Moving 2-subcolourings between ``G`` and ``G'``."""
from __future__ import annotations

from dataclasses import dataclass

from ..core.graph import Graph
from ..subcoloring.coloring import (Color, PartialAssignment, Subcoloring, is_saturated,
                                    verify_2_subcoloring)
from ..subcoloring.defective import PreconditionError
from ..subcoloring.solver import solve_2_subcoloring
from .construct import EdgeCopy, ReductionIntegrityError, ReductionOutput


def project_coloring(r: ReductionOutput, cprime: Subcoloring) -> Subcoloring:
    """Colour of each source vertex = the common colour of its gadget's ports."""
    if len(cprime) != r.gprime.n:
        raise ValueError("colouring does not cover G'")
    colors = []
    for v in r.g.vertices():
        seen = {cprime[r.port(v, i)] for i in range(len(r.h.ports))}
        if len(seen) != 1:
            raise ReductionIntegrityError(f"ports of the gadget for vertex {v} disagree", v)
        colors.append(seen.pop())
    if not verify_2_subcoloring(r.gprime, cprime):
        raise ValueError("colouring is not a 2-subcolouring of G'")
    return Subcoloring(tuple(colors))


@dataclass
class SaturationAudit:
    """Per source vertex: the port left unsaturated inside its gadget, and the
    edge (if any) whose gadget copy saturates it."""

    free_port: dict[int, int]
    saturating_edge: dict[int, tuple[int, int] | None]


def _plan(r: ReductionOutput, c: Subcoloring) -> tuple[SaturationAudit, dict[EdgeCopy, bool]]:
    """Pick the unsaturated port of every vertex gadget and, for each edge copy,
    whether its ``x1`` side is the saturated one (None when bichromatic)."""
    free_port: dict[int, int] = {}
    sat_edge: dict[int, tuple[int, int] | None] = {v: None for v in r.g.vertices()}
    x1_saturated: dict[EdgeCopy, bool] = {}
    for (u, v), (c1, c2) in sorted(r.edge_map.items()):
        if c[u] != c[v]:
            continue
        for end in (u, v):
            if sat_edge[end] is not None:
                raise PreconditionError(f"vertex {end} has two neighbours of its colour")
            sat_edge[end] = (u, v)
        # copy 1 saturates its port in H_u, copy 2 its port in H_v
        free_port[u] = c1.port_u
        free_port[v] = c2.port_v
        x1_saturated[c1] = True
        x1_saturated[c2] = False
    for v in r.g.vertices():
        free_port.setdefault(v, 0)
    return SaturationAudit(free_port, sat_edge), x1_saturated


def extend_coloring(r: ReductionOutput, c: Subcoloring) -> Subcoloring | None:
    """A 2-subcolouring of ``G'`` whose projection is ``c``, or None if a
    constrained gadget solve fails."""
    if len(c) != r.g.n or not verify_2_subcoloring(r.g, c):
        raise PreconditionError("source colouring is not a 2-subcolouring of G")
    audit, x1_sat = _plan(r, c)
    h, e = r.h, r.e
    out = [Color.RED] * r.gprime.n
    h_cache: dict[tuple[Color, int], Subcoloring | None] = {}
    for v in r.g.vertices():
        key = (c[v], audit.free_port[v])
        if key not in h_cache:
            fixed = {p: c[v] for p in h.ports}
            h_cache[key] = solve_2_subcoloring(
                h.graph, PartialAssignment(fixed, frozenset({h.ports[key[1]]})))
        sol = h_cache[key]
        if sol is None:
            return None
        for w in h.graph.vertices():
            out[r.h_vertex(v, w)] = sol[w]

    e_cache: dict[tuple, Subcoloring | None] = {}
    for copy in r.copies():
        u, v = copy.edge
        if c[u] != c[v]:
            key = (c[u], c[v], None)
            unsat, sat = {e.x1, e.x2}, set()
        else:
            key = (c[u], c[v], x1_sat[copy])
            hot, cold = (e.x1, e.x2) if key[2] else (e.x2, e.x1)
            unsat, sat = {cold}, {hot}
        if key not in e_cache:
            e_cache[key] = solve_2_subcoloring(
                e.graph, PartialAssignment({e.x1: c[u], e.x2: c[v]}, frozenset(unsat), frozenset(sat)))
        sol = e_cache[key]
        if sol is None:
            return None
        for w in e.graph.vertices():
            out[copy.ids[w]] = sol[w]

    result = Subcoloring(tuple(out))
    if not verify_2_subcoloring(r.gprime, result):
        raise ReductionIntegrityError("extended colouring is not a 2-subcolouring of G'")
    _audit(r, c, audit, result)
    return result


def _audit(r: ReductionOutput, c: Subcoloring, audit: SaturationAudit, cprime: Subcoloring) -> None:
    """Each gadget copy leaves exactly its planned port unsaturated internally,
    and only the planned edge copy saturates that port from outside."""
    gp: Graph = r.gprime
    for v in r.g.vertices():
        for i, p in enumerate(r.h.ports):
            port = r.port(v, i)
            inside = any(cprime[w] == cprime[port] for w in gp.neighbors(port)
                         if r.owner[w] == ("H", v))
            if inside == (i == audit.free_port[v]):
                raise ReductionIntegrityError(
                    f"gadget of vertex {v}: port {i} saturation inside the gadget is not as planned")
    for v, edge in audit.saturating_edge.items():
        port = r.port(v, audit.free_port[v])
        if is_saturated(gp, cprime, port) != (edge is not None):
            raise ReductionIntegrityError(f"port budget of vertex {v} violated")
