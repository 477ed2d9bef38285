"""Elementary structural predicates."""
from __future__ import annotations

import math
from collections import deque

from .graph import Graph


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in g.vertices()), default=0)


def is_triangle_free(g: Graph) -> bool:
    masks = g.adj_masks
    return all(not (masks[u] & masks[v]) for u, v in g.edges)


def find_triangle(g: Graph) -> list[int] | None:
    masks = g.adj_masks
    for u, v in sorted(g.edges):
        common = masks[u] & masks[v]
        if common:
            w = (common & -common).bit_length() - 1
            return sorted((u, v, w))
    return None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    for s in g.vertices():
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            v = q.popleft()
            if 2 * dist[v] >= best:
                break
            for u in g.neighbors(v):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    q.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_bipartite(g: Graph) -> tuple[bool, tuple[list[int], list[int]] | None]:
    side = [-1] * g.n
    for s in g.vertices():
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            v = q.popleft()
            for u in g.neighbors(v):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    q.append(u)
                elif side[u] == side[v]:
                    return False, None
    return True, ([v for v in g.vertices() if side[v] == 0],
                  [v for v in g.vertices() if side[v] == 1])
