"""Defective (a, b)-colourings."""
from __future__ import annotations

from ..core.graph import Graph
from ..core.properties import max_degree
from .coloring import BLUE, RED, Color, DefectBound, Subcoloring


class PreconditionError(ValueError):
    pass


def _same_count(g: Graph, colors, v: int) -> int:
    return sum(1 for u in g.neighbors(v) if colors[u] == colors[v])


def verify_defective_coloring(g: Graph, c: Subcoloring, d: DefectBound) -> bool:
    """RED class induces max degree <= d.a and BLUE class <= d.b."""
    if len(c) != g.n:
        raise ValueError("colouring is not total on the graph")
    return all(_same_count(g, c.colors, v) <= d.for_color(c[v]) for v in g.vertices())


def lovasz_partition(g: Graph, d: DefectBound, *, with_flips: bool = False):
    """Local-search (a, b)-colouring for graphs with maximum degree <= a + b + 1.

    Start with every vertex RED and repeatedly flip the lowest-indexed vertex
    with too many same-coloured neighbours.  A flip lowers
    ``(b + 1) * e(RED) + (a + 1) * e(BLUE)`` by at least ``min(a, b) + 1``, so
    at most ``(b + 1) * |E| / (min(a, b) + 1)`` flips happen; for ``a == b``
    the number of monochromatic edges itself drops on every flip and the
    bound is ``|E|``.

    Returns the colouring, or ``(colouring, flips)`` when ``with_flips``.
    """
    if max_degree(g) > d.a + d.b + 1:
        raise PreconditionError(
            f"maximum degree {max_degree(g)} exceeds a + b + 1 = {d.a + d.b + 1}")
    colors = [RED] * g.n
    bound = [d.a, d.b]
    flips = 0
    v = 0
    while v < g.n:
        if _same_count(g, colors, v) > bound[colors[v]]:
            colors[v] = Color(1 - colors[v])
            flips += 1
            touched = [v, *g.neighbors(v)]
            v = min(touched)
            continue
        v += 1
    result = Subcoloring(tuple(colors))
    return (result, flips) if with_flips else result
