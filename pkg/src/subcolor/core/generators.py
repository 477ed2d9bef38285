"""Instance generators and named graphs."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Iterator

from .graph import Graph

MAX_ENUM_N = 8


class EnumerationRefused(ValueError):
    pass


def random_grid_subgraph(width: int, height: int, vertex_keep_prob: float | Fraction,
                         seed: int) -> Graph:
    """Induced subgraph of the ``width x height`` grid keeping each vertex with the given probability.

    Kept cells are renumbered in row-major order.
    """
    if width < 1 or height < 1:
        raise ValueError("grid dimensions must be positive")
    p = float(vertex_keep_prob)
    if not 0.0 <= p <= 1.0:
        raise ValueError("keep probability must lie in [0, 1]")
    rng = random.Random(seed)
    index = {}
    for r in range(height):
        for c in range(width):
            if rng.random() < p:
                index[(r, c)] = len(index)
    edges = []
    for (r, c), i in index.items():
        if (r, c + 1) in index:
            edges.append((i, index[(r, c + 1)]))
        if (r + 1, c) in index:
            edges.append((i, index[(r + 1, c)]))
    return Graph(len(index), edges)


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for v in range(1, n) for u in range(v)]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant ``(n, code)``: minimum edge-bit code over degree-sorted relabelings."""
    n = g.n
    pairs = _pairs(n)
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(g.degree(v), []).append(v)
    blocks = [by_deg[d] for d in sorted(by_deg)]
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [v for block in choice for v in block]
        code = 0
        for k, (a, b) in enumerate(pairs):
            if g.has_edge(order[a], order[b]):
                code |= 1 << k
        if best is None or code < best:
            best = code
    return n, best or 0


def enumerate_graphs(n: int, up_to_isomorphism: bool = False) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices once, or one per isomorphism class."""
    if n > MAX_ENUM_N:
        raise EnumerationRefused(f"enumeration refused for n={n} > {MAX_ENUM_N}")
    if n < 0:
        raise ValueError("n must be non-negative")
    pairs = _pairs(n)
    seen = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
        if up_to_isomorphism:
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
        yield g


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = _pairs(n)
    return Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


# -- named graphs -------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def grid_graph(width: int, height: int) -> Graph:
    return random_grid_subgraph(width, height, 1.0, 0)


def wheel_graph(rim: int) -> Graph:
    """Cycle ``0..rim-1`` plus hub ``rim`` adjacent to every rim vertex."""
    return Graph(rim + 1, [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def house_graph() -> Graph:
    return Graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)])
