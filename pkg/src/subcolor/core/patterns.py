"""Named small pattern graphs and induced-subgraph detection."""
from __future__ import annotations

import enum

from .graph import Graph


class Pattern(enum.Enum):
    P3 = "P3"
    K4 = "K4"
    BULL = "bull"
    HOUSE = "house"
    BUTTERFLY = "butterfly"
    GEM = "gem"
    DIAMOND = "diamond"
    CLAW = "claw"
    C4 = "C4"

    @property
    def graph(self) -> Graph:
        return _PATTERN_GRAPHS[self]


_PATTERN_GRAPHS = {
    Pattern.P3: Graph(3, [(0, 1), (1, 2)]),
    Pattern.K4: Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    # triangle 0-1-2, pendants 3 (at 0) and 4 (at 1)
    Pattern.BULL: Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
    # square 0-1-2-3, roof 4 over edge 0-1
    Pattern.HOUSE: Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]),
    # triangles 0-1-2 and 0-3-4 sharing vertex 0
    Pattern.BUTTERFLY: Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]),
    # path 0-1-2-3 plus hub 4
    Pattern.GEM: Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    Pattern.DIAMOND: Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    Pattern.CLAW: Graph(4, [(0, 1), (0, 2), (0, 3)]),
    Pattern.C4: Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
}


def _search_order(p: Graph) -> list[int]:
    """Pattern vertices ordered so each one after the first touches an earlier one."""
    start = max(range(p.n), key=lambda v: (p.degree(v), -v))
    order, seen = [start], {start}
    while len(order) < p.n:
        best = max((v for v in range(p.n) if v not in seen),
                   key=lambda v: (sum(1 for u in order if p.has_edge(u, v)), p.degree(v), -v))
        order.append(best)
        seen.add(best)
    return order


def find_induced(g: Graph, p: Graph) -> list[int] | None:
    """Vertices of ``g`` inducing a copy of ``p`` (image of pattern vertex i at index i), or None.

    Backtracking over ordered partial maps with degree pruning; complete for
    connected patterns, which is all this project uses.
    """
    if p.n == 0:
        return []
    if p.n > g.n:
        return None
    order = _search_order(p)
    gmask = g.adj_masks
    pdeg = [p.degree(v) for v in range(p.n)]
    image = [-1] * p.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        pv = order[k]
        anchor = next((order[j] for j in range(k) if p.has_edge(order[j], pv)), None)
        if anchor is None:
            candidates = range(g.n)
        else:
            candidates = sorted(g.neighbors(image[anchor]))
        for gv in candidates:
            if used >> gv & 1 or g.degree(gv) < pdeg[pv]:
                continue
            ok = True
            for j in range(k):
                pu = order[j]
                if p.has_edge(pu, pv) != bool(gmask[gv] >> image[pu] & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[pv] = gv
            used |= 1 << gv
            if extend(k + 1):
                return True
            used &= ~(1 << gv)
            image[pv] = -1
        return False

    return list(image) if extend(0) else None


def contains_induced(g: Graph, p: Pattern | Graph) -> list[int] | None:
    """Witness vertex list inducing ``p`` in ``g``, or None when ``g`` is ``p``-free."""
    pg = p.graph if isinstance(p, Pattern) else p
    return find_induced(g, pg)
