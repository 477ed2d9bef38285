"""Bounded exhaustive search for gadgets.

Edge gadgets are searched layer by layer: a core graph on ``z1, z2`` and the
internal vertices first, then the attachments of ``y1, y2``, then those of
``x1, x2``.  Each layer is checked against the property that only depends on
it before the next layer is enumerated.  Within a layer candidates are visited
by increasing edge count and then lexicographically, so the first gadget found
is deterministic.

Vertex-gadget search enumerates graphs with the ports as the first ``2k``
vertices.  It is only practical for very small ``n``; the search reports
whether the space was exhausted or the time budget ran out.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Sequence

from ..core.graph import Graph
from ..core.holes import find_odd_hole
from ..core.patterns import Pattern, contains_induced
from ..subcoloring.coloring import is_saturated
from ..subcoloring.solver import enumerate_2_subcolorings
from .specs import PORT_DEGREE_LIMIT, EdgeGadgetSpec, VertexGadgetSpec
from .verify import verify_edge_gadget

EDGE_N_RANGE = (6, 12)
VERTEX_N_MAX = 16
VERTEX_PAIR_COUNTS = (3, 4)
CLASS_PATTERNS = (Pattern.K4, Pattern.BULL, Pattern.HOUSE, Pattern.BUTTERFLY, Pattern.GEM)

# fixed labels of the edge-gadget terminals during search
X1, X2, Y1, Y2, Z1, Z2 = range(6)


class SynthesisRefused(ValueError):
    pass


@dataclass
class SynthesisResult:
    found: EdgeGadgetSpec | VertexGadgetSpec | None
    examined: int
    exhausted: bool
    elapsed: float
    per_n: dict[int, int] = field(default_factory=dict)
    note: str = ""

    def to_json(self) -> dict:
        return {"found": self.found.to_json() if self.found else None, "examined": self.examined,
                "exhausted": self.exhausted, "elapsed_s": round(self.elapsed, 3),
                "per_n": {str(k): v for k, v in self.per_n.items()}, "note": self.note}


class _Clock:
    def __init__(self, budget: float | None):
        self.start = time.monotonic()
        self.budget = budget

    def out(self) -> bool:
        return self.budget is not None and time.monotonic() - self.start > self.budget

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _subsets_by_size(items: Sequence, max_size: int | None = None) -> Iterator[tuple]:
    top = len(items) if max_size is None else min(max_size, len(items))
    for k in range(top + 1):
        yield from combinations(items, k)


def in_target_class(g: Graph) -> bool:
    """Free of K4, bull, house, butterfly, gem and odd holes."""
    return (not any(contains_induced(g, p) for p in CLASS_PATTERNS)
            and find_odd_hole(g) is None)


def _degrees(n: int, edges) -> list[int]:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _core_ok(core: Graph, z1: int, z2: int) -> bool:
    seen = False
    for c in enumerate_2_subcolorings(core):
        seen = True
        if c[z1] == c[z2] or not is_saturated(core, c, z1) or not is_saturated(core, c, z2):
            return False
    return seen


def _link_ok(link: Graph, y1: int, y2: int) -> bool:
    seen = False
    for c in enumerate_2_subcolorings(link):
        seen = True
        if c[y1] == c[y2] or is_saturated(link, c, y1) or is_saturated(link, c, y2):
            return False
    return seen


def synthesize_edge_gadget(n_max: int, degree_cap: int = 4, time_budget: float | None = None,
                           require_class: bool = False) -> SynthesisResult:
    """First edge gadget (in search order) on at most ``n_max`` vertices.

    Terminals are labelled ``x1=0, x2=1, y1=2, y2=3, z1=4, z2=5``.  With
    ``require_class`` the gadget must also lie in the target graph class.
    """
    lo, hi = EDGE_N_RANGE
    if not lo <= n_max <= hi:
        raise SynthesisRefused(f"n_max must lie in [{lo}, {hi}], got {n_max}")
    if degree_cap < 2:
        raise SynthesisRefused("degree_cap must be at least 2")
    clock = _Clock(time_budget)
    examined = 0
    per_n: dict[int, int] = {}
    for n in range(6, n_max + 1):
        before = examined
        core_vs = [Z1, Z2] + list(range(6, n))
        # core graphs are built on ids 0..k-1 (z1=0, z2=1) for enumeration
        k = len(core_vs)
        core_pairs = list(combinations(range(k), 2))
        for core_edges in _subsets_by_size(core_pairs):
            if clock.out():
                per_n[n] = examined - before
                return SynthesisResult(None, examined, False, clock.elapsed(), per_n, "time budget exhausted")
            deg = _degrees(k, core_edges)
            if max(deg) > degree_cap or any(deg[i] < deg[i + 1] for i in range(2, k - 1)):
                continue
            examined += 1
            if not _core_ok(Graph(k, core_edges), 0, 1):
                continue
            base = [(core_vs[a], core_vs[b]) for a, b in core_edges]
            hit = _extend_with_y(n, core_vs, base, degree_cap, clock, require_class)
            examined += hit[1]
            if hit[0] is not None:
                per_n[n] = examined - before
                return SynthesisResult(hit[0], examined, True, clock.elapsed(), per_n)
            if hit[2]:
                per_n[n] = examined - before
                return SynthesisResult(None, examined, False, clock.elapsed(), per_n, "time budget exhausted")
        per_n[n] = examined - before
    return SynthesisResult(None, examined, True, clock.elapsed(), per_n, "search space exhausted")


def _extend_with_y(n, core_vs, base, cap, clock, require_class):
    examined = 0
    y_slots = [(Y1, c) for c in core_vs] + [(Y2, c) for c in core_vs] + [(Y1, Y2)]
    for y_edges in _subsets_by_size(y_slots):
        if clock.out():
            return None, examined, True
        edges = base + list(y_edges)
        deg = _degrees(n, edges)
        if deg[Y1] == 0 or deg[Y2] == 0 or max(deg) > cap:
            continue
        examined += 1
        link = Graph(n, edges).without((X1, X2))
        ids = {v: i for i, v in enumerate(link[1])}
        if not _link_ok(link[0], ids[Y1], ids[Y2]):
            continue
        found, more, timed_out = _extend_with_x(n, core_vs, edges, cap, clock, require_class)
        examined += more
        if found is not None or timed_out:
            return found, examined, timed_out
    return None, examined, False


def _extend_with_x(n, core_vs, edges, cap, clock, require_class):
    examined = 0
    reach = list(core_vs) + [Y1, Y2]
    choices = [s for s in _subsets_by_size(reach, PORT_DEGREE_LIMIT)]
    for join in (False, True):
        for s1 in choices:
            for s2 in choices:
                if clock.out():
                    return None, examined, True
                extra = [(X1, v) for v in s1] + [(X2, v) for v in s2] + ([(X1, X2)] if join else [])
                g = Graph(n, edges + extra)
                if max(g.degree(v) for v in g.vertices()) > cap:
                    continue
                spec = EdgeGadgetSpec(g, X1, X2, Y1, Y2, Z1, Z2)
                if g.degree(X1) > PORT_DEGREE_LIMIT or g.degree(X2) > PORT_DEGREE_LIMIT:
                    continue
                if not g.is_connected():
                    continue
                examined += 1
                report = verify_edge_gadget(spec, method="enumerate")
                if not report.all_pass:
                    continue
                if require_class and not in_target_class(g):
                    continue
                return spec, examined, False
    return None, examined, False


# ---------------------------------------------------------------------------
# vertex gadgets

def _vertex_props(g: Graph, ports: Sequence[int]) -> bool:
    seen = False
    for c in enumerate_2_subcolorings(g):
        seen = True
        if len({c[p] for p in ports}) != 1:
            return False
        if sum(not is_saturated(g, c, p) for p in ports) > 1:
            return False
    return seen


def synthesize_vertex_gadget(e: EdgeGadgetSpec, n_max: int, pair_count: int,
                             time_budget: float | None = None) -> SynthesisResult:
    """First graph (in search order) whose ports satisfy V1 and V2.

    The edge gadget ``e`` fixes the context the result is meant for; it must
    be a valid edge gadget.  Graphs on exactly ``2 * pair_count`` vertices
    are skipped: with every vertex a port, V1 cannot hold non-vacuously.
    """
    if pair_count not in VERTEX_PAIR_COUNTS:
        raise SynthesisRefused(f"pair_count must be one of {VERTEX_PAIR_COUNTS}, got {pair_count}")
    if n_max > VERTEX_N_MAX:
        raise SynthesisRefused(f"n_max must be at most {VERTEX_N_MAX}, got {n_max}")
    e.validate()
    clock = _Clock(time_budget)
    k = 2 * pair_count
    ports = list(range(k))
    pairs = tuple((2 * i, 2 * i + 1) for i in range(pair_count))
    examined = 0
    per_n: dict[int, int] = {}
    for n in range(k + 1, n_max + 1):
        before = examined
        all_pairs = list(combinations(range(n), 2))
        for m in range(n - 1, len(all_pairs) + 1):
            for edges in combinations(all_pairs, m):
                if clock.out():
                    per_n[n] = examined - before
                    return SynthesisResult(None, examined, False, clock.elapsed(), per_n,
                                           "time budget exhausted")
                deg = _degrees(n, edges)
                if max(deg) > 4 or any(deg[p] > PORT_DEGREE_LIMIT for p in ports):
                    continue
                if any(deg[i] < deg[i + 1] for i in range(k, n - 1)):
                    continue
                g = Graph(n, edges)
                if not g.is_connected():
                    continue
                examined += 1
                if _vertex_props(g, ports):
                    per_n[n] = examined - before
                    return SynthesisResult(VertexGadgetSpec(g, tuple(ports), pairs), examined, True,
                                           clock.elapsed(), per_n)
        per_n[n] = examined - before
    return SynthesisResult(None, examined, True, clock.elapsed(), per_n, "search space exhausted")
