"""Odd-hole detection.

An edge ``uv`` is *dominated* when every other neighbour of ``u`` is adjacent
to ``v`` (or vice versa).  Such an edge can never lie on a hole of length at
least four, so every hole lives in the subgraph of undominated edges.  When
that subgraph is bipartite no odd hole exists; otherwise each non-bipartite
block of it is searched exhaustively for induced odd cycles.
"""
from __future__ import annotations

import time

import networkx as nx

from .graph import Graph
from .properties import is_bipartite


class SearchGuardError(RuntimeError):
    """An exhaustive search refused to run (size guard) or ran out of time."""


def hole_capable_edges(g: Graph) -> list[tuple[int, int]]:
    masks = g.adj_masks
    out = []
    for u, v in g.edge_list():
        rest_u = masks[u] & ~(1 << v)
        rest_v = masks[v] & ~(1 << u)
        if rest_u & ~masks[v] and rest_v & ~masks[u]:
            out.append((u, v))
    return out


def odd_hole_certificate(g: Graph) -> tuple[list[int], list[int]] | None:
    """Bipartition of the undominated-edge subgraph, which proves ``g`` has no odd hole."""
    ok, parts = is_bipartite(Graph(g.n, hole_capable_edges(g)))
    return parts if ok else None


def _odd_blocks(g: Graph) -> list[tuple[set[int], set[tuple[int, int]]]]:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(hole_capable_edges(g))
    blocks = []
    for block_edges in nx.biconnected_component_edges(nxg):
        edges = {(min(u, v), max(u, v)) for u, v in block_edges}
        if len(edges) < 5:
            continue
        verts = {x for e in edges for x in e}
        sub = nx.Graph(list(edges))
        if not nx.is_bipartite(sub):
            blocks.append((verts, edges))
    return blocks


def find_odd_hole(g: Graph, max_vertices: int = 200,
                  timeout: float | None = None) -> list[int] | None:
    """Return an odd hole (induced cycle of odd length >= 5) as a vertex cycle, or None.

    The exhaustive stage only runs on non-bipartite blocks of the undominated
    subgraph; a block larger than ``max_vertices`` raises
    :class:`SearchGuardError`, as does exceeding ``timeout`` seconds.
    """
    blocks = _odd_blocks(g)
    if not blocks:
        return None
    masks = g.adj_masks
    deadline = None if timeout is None else time.monotonic() + timeout
    for verts, edges in blocks:
        if len(verts) > max_vertices:
            raise SearchGuardError(
                f"odd-hole search block has {len(verts)} vertices (guard {max_vertices})")
        nbrs: dict[int, list[int]] = {v: [] for v in verts}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        for v in nbrs:
            nbrs[v].sort()
        for s in sorted(verts):
            hole = _holes_from(s, nbrs, masks, deadline)
            if hole is not None:
                return hole
    return None


def _holes_from(s, nbrs, masks, deadline):
    # iterative DFS over induced paths s = p0, p1, ..., all other vertices > s
    path = [s]
    path_mask = 1 << s
    # interior mask: path vertices that a new vertex must not touch (all but the last and s)
    stack = [iter([u for u in nbrs[s] if u > s])]
    steps = 0
    while stack:
        steps += 1
        if deadline is not None and steps % 4096 == 0 and time.monotonic() > deadline:
            raise SearchGuardError("odd-hole search timed out")
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            v = path.pop()
            path_mask &= ~(1 << v)
            continue
        last = path[-1]
        if path_mask >> w & 1:
            continue
        forbidden = path_mask & ~(1 << last) & ~(1 << s)
        if masks[w] & forbidden:
            continue
        touches_s = len(path) > 1 and masks[w] >> s & 1
        if touches_s:
            length = len(path) + 1
            if length >= 5 and length % 2 == 1:
                return path + [w]
            continue
        path.append(w)
        path_mask |= 1 << w
        stack.append(iter([u for u in nbrs[w] if u > s]))
    return None


def is_induced_cycle(g: Graph, cycle: list[int]) -> bool:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent = g.has_edge(cycle[i], cycle[j])
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adjacent != consecutive:
                return False
    return True
