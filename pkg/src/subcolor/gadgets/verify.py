"""Exhaustive certification of edge and vertex gadgets.

Universal properties are decided either by enumerating every 2-subcolouring of
the relevant (induced) graph, or, for graphs too large to enumerate, by asking
the exact solver for a colouring that violates the property.  Both routes are
complete; the enumeration route also reports how many colourings it saw.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..core.graph import Graph
from ..core.planarity import is_planar
from ..subcoloring.coloring import BLUE, RED, Color, PartialAssignment, Subcoloring, is_saturated
from ..subcoloring.solver import MAX_ENUM_N, enumerate_2_subcolorings, solve_2_subcoloring
from .specs import EdgeGadgetSpec, VertexGadgetSpec

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


@dataclass
class PropertyVerdict:
    name: str
    status: str
    domain: tuple[int, ...] = ()
    counterexample: dict[int, Color] | None = None
    detail: str = ""
    colorings: int | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out = {"status": self.status, "detail": self.detail, "domain": list(self.domain)}
        if self.colorings is not None:
            out["colorings"] = self.colorings
        if self.counterexample is not None:
            out["counterexample"] = {
                "red": sorted(v for v, c in self.counterexample.items() if c == RED),
                "blue": sorted(v for v, c in self.counterexample.items() if c == BLUE),
            }
        return out


@dataclass
class GadgetReport:
    kind: str
    verdicts: dict[str, PropertyVerdict] = field(default_factory=dict)
    forced: dict[int, Color] | None = None
    ports_on_common_face: bool | None = None
    method: str = "enumerate"

    @property
    def all_pass(self) -> bool:
        return all(v.passed for v in self.verdicts.values())

    def to_json(self) -> dict:
        out = {"kind": self.kind, "method": self.method, "all_pass": self.all_pass,
               "verdicts": {k: v.to_json() for k, v in self.verdicts.items()}}
        if self.forced is not None:
            out["forced"] = {"red": sorted(v for v, c in self.forced.items() if c == RED),
                             "blue": sorted(v for v, c in self.forced.items() if c == BLUE)}
        if self.ports_on_common_face is not None:
            out["ports_on_common_face"] = self.ports_on_common_face
        return out


# ---------------------------------------------------------------------------
# helpers

def _sub(g: Graph, drop: Iterable[int]) -> tuple[Graph, list[int], dict[int, int]]:
    sub, old = g.without(drop)
    return sub, old, {v: i for i, v in enumerate(old)}


def _lift(c: Subcoloring, old: list[int]) -> dict[int, Color]:
    return {old[i]: c[i] for i in range(len(old))}


def _solve(g: Graph, fixed=None, unsat=(), sat=()) -> Subcoloring | None:
    return solve_2_subcoloring(g, PartialAssignment(fixed or {}, frozenset(unsat), frozenset(sat)))


def _pick_method(n: int, method: str | None) -> str:
    if method is None:
        return "enumerate" if n <= MAX_ENUM_N else "query"
    if method not in ("enumerate", "query"):
        raise ValueError(f"unknown verification method {method!r}")
    return method


def _universal(name: str, g: Graph, old: list[int], colorings: Iterator[Subcoloring],
               holds, detail: str) -> PropertyVerdict:
    count = 0
    for c in colorings:
        count += 1
        if not holds(c):
            return PropertyVerdict(name, FAIL, tuple(old), _lift(c, old), detail, count)
    if count == 0:
        return PropertyVerdict(name, VACUOUS, tuple(old), None, "no 2-subcolouring to quantify over", 0)
    return PropertyVerdict(name, PASS, tuple(old), None, detail, count)


def _universal_by_query(name: str, g: Graph, old: list[int], queries, detail: str) -> PropertyVerdict:
    if solve_2_subcoloring(g) is None:
        return PropertyVerdict(name, VACUOUS, tuple(old), None, "no 2-subcolouring to quantify over")
    for q in queries:
        c = _solve(g, **q)
        if c is not None:
            return PropertyVerdict(name, FAIL, tuple(old), _lift(c, old), detail)
    return PropertyVerdict(name, PASS, tuple(old), None, detail)


# ---------------------------------------------------------------------------
# edge gadget

def verify_edge_gadget(e: EdgeGadgetSpec, method: str | None = None) -> GadgetReport:
    """Check the four edge-gadget properties.

    P1  every colouring of E - {x1,x2,y1,y2}: z1, z2 differ and are saturated
    P2  every colouring of E - {x1,x2}: y1, y2 differ and are unsaturated
    P3  some colouring of E: x1, x2 differ and are unsaturated
    P4  every colouring of E with x1, x2 equal: exactly one of them is saturated
    """
    e.validate()
    g = e.graph
    method = _pick_method(g.n, method)
    report = GadgetReport("edge", method=method)

    g1, old1, ix1 = _sub(g, (e.x1, e.x2, e.y1, e.y2))
    z1, z2 = ix1[e.z1], ix1[e.z2]
    d1 = "z1, z2 distinct and saturated"
    if method == "enumerate":
        report.verdicts["P1"] = _universal(
            "P1", g1, old1, enumerate_2_subcolorings(g1),
            lambda c: c[z1] != c[z2] and is_saturated(g1, c, z1) and is_saturated(g1, c, z2), d1)
    else:
        report.verdicts["P1"] = _universal_by_query("P1", g1, old1, [
            {"fixed": {z1: RED, z2: RED}}, {"fixed": {z1: BLUE, z2: BLUE}},
            {"unsat": (z1,)}, {"unsat": (z2,)}], d1)

    g2, old2, ix2 = _sub(g, (e.x1, e.x2))
    y1, y2 = ix2[e.y1], ix2[e.y2]
    d2 = "y1, y2 distinct and unsaturated"
    if method == "enumerate":
        report.verdicts["P2"] = _universal(
            "P2", g2, old2, enumerate_2_subcolorings(g2),
            lambda c: c[y1] != c[y2] and not is_saturated(g2, c, y1) and not is_saturated(g2, c, y2), d2)
    else:
        report.verdicts["P2"] = _universal_by_query("P2", g2, old2, [
            {"fixed": {y1: RED, y2: RED}}, {"fixed": {y1: BLUE, y2: BLUE}},
            {"sat": (y1,)}, {"sat": (y2,)}], d2)

    full = tuple(range(g.n))
    witness = None
    for c1 in (RED, BLUE):
        witness = _solve(g, fixed={e.x1: c1, e.x2: c1.other}, unsat=(e.x1, e.x2))
        if witness is not None:
            break
    if witness is not None:
        report.verdicts["P3"] = PropertyVerdict("P3", PASS, full, _lift(witness, list(full)),
                                                "witness: x1, x2 distinct and unsaturated")
    else:
        report.verdicts["P3"] = PropertyVerdict("P3", FAIL, full, None,
                                                "no colouring gives x1, x2 distinct and unsaturated")

    d4 = "x1, x2 equal: exactly one saturated"
    if method == "enumerate":
        def same_colour_runs():
            for col in (RED, BLUE):
                yield from enumerate_2_subcolorings(g, PartialAssignment({e.x1: col, e.x2: col}))
        report.verdicts["P4"] = _universal(
            "P4", g, list(full), same_colour_runs(),
            lambda c: is_saturated(g, c, e.x1) != is_saturated(g, c, e.x2), d4)
    else:
        nonempty = any(_solve(g, fixed={e.x1: col, e.x2: col}) is not None for col in (RED, BLUE))
        if not nonempty:
            report.verdicts["P4"] = PropertyVerdict("P4", VACUOUS, full, None,
                                                    "no colouring with x1, x2 equal")
        else:
            queries = []
            for col in (RED, BLUE):
                fx = {e.x1: col, e.x2: col}
                queries += [{"fixed": fx, "unsat": (e.x1, e.x2)}, {"fixed": fx, "sat": (e.x1, e.x2)}]
            v = _universal_by_query("P4", g, list(full), queries, d4)
            report.verdicts["P4"] = v
    # P3's witness is not a counterexample
    if report.verdicts["P3"].passed:
        report.verdicts["P3"].counterexample = None
        report.verdicts["P3"].detail += f" ({_fmt(witness)})"
    return report


def _fmt(c: Subcoloring) -> str:
    return f"red={c.color_class(RED)} blue={c.color_class(BLUE)}"


# ---------------------------------------------------------------------------
# vertex gadget

def ports_on_common_face(h: VertexGadgetSpec) -> bool:
    """Whether some planar embedding has all ports on one face in the listed cyclic order."""
    g = h.graph
    k = len(h.ports)
    ring = list(range(g.n, g.n + k))
    apex = g.n + k
    edges = list(g.edges)
    for i, p in enumerate(h.ports):
        edges += [(p, ring[i]), (ring[i], ring[(i + 1) % k]), (ring[i], apex)]
    return is_planar(Graph(g.n + k + 1, edges))[0]


def verify_vertex_gadget(h: VertexGadgetSpec, method: str | None = None,
                         compute_forced: bool = True) -> GadgetReport:
    """Check V1 (ports share one colour), V2 (at most one unsaturated port) and
    V3 (each port is the unsaturated one in some colouring); also report the
    vertices whose colour is forced once ``ports[0]`` is RED."""
    h.validate()
    g = h.graph
    ports = list(h.ports)
    method = _pick_method(g.n, method)
    report = GadgetReport("vertex", method=method)
    report.ports_on_common_face = ports_on_common_face(h)
    full = list(range(g.n))

    if method == "enumerate":
        colorings = list(enumerate_2_subcolorings(g))
        report.verdicts["V1"] = _universal("V1", g, full, iter(colorings),
                                           lambda c: len({c[p] for p in ports}) == 1,
                                           "all ports share one colour")
        report.verdicts["V2"] = _universal(
            "V2", g, full, iter(colorings),
            lambda c: sum(not is_saturated(g, c, p) for p in ports) <= 1,
            "at most one port unsaturated")
        if colorings:
            missing = [p for p in ports if not any(not is_saturated(g, c, p) for c in colorings)]
            report.verdicts["V3"] = PropertyVerdict(
                "V3", PASS if not missing else FAIL, tuple(full), None,
                "every port can be the unsaturated one" + (f"; never: {missing}" if missing else ""),
                len(colorings))
        else:
            report.verdicts["V3"] = PropertyVerdict("V3", VACUOUS, tuple(full), None, "no colouring", 0)
        if compute_forced and colorings:
            pinned = [c for c in colorings if c[ports[0]] == RED]
            report.forced = {v: pinned[0][v] for v in full if len({c[v] for c in pinned}) == 1}
        return report

    q1 = []
    for p in ports[1:]:
        q1 += [{"fixed": {ports[0]: RED, p: BLUE}}, {"fixed": {ports[0]: BLUE, p: RED}}]
    report.verdicts["V1"] = _universal_by_query("V1", g, full, q1, "all ports share one colour")
    q2 = [{"unsat": (p, q)} for i, p in enumerate(ports) for q in ports[i + 1:]]
    report.verdicts["V2"] = _universal_by_query("V2", g, full, q2, "at most one port unsaturated")
    if report.verdicts["V1"].status == VACUOUS:
        report.verdicts["V3"] = PropertyVerdict("V3", VACUOUS, tuple(full), None, "no colouring")
        return report
    missing = [p for p in ports if _solve(g, unsat=(p,)) is None]
    report.verdicts["V3"] = PropertyVerdict(
        "V3", PASS if not missing else FAIL, tuple(full), None,
        "every port can be the unsaturated one" + (f"; never: {missing}" if missing else ""))
    if compute_forced:
        forced = {ports[0]: RED}
        for v in full:
            if v == ports[0]:
                continue
            options = [col for col in (RED, BLUE)
                       if _solve(g, fixed={ports[0]: RED, v: col}) is not None]
            if len(options) == 1:
                forced[v] = options[0]
        report.forced = forced
    return report
