"""Membership of a graph in the target class, with replayable witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..core.graph import Graph
from ..core.holes import SearchGuardError, find_odd_hole
from ..core.patterns import Pattern, contains_induced
from ..core.planarity import is_planar, nonplanar_witness
from ..core.properties import is_bipartite

PATTERN_VERDICTS = (("K4-free", Pattern.K4), ("bull-free", Pattern.BULL), ("house-free", Pattern.HOUSE),
                    ("butterfly-free", Pattern.BUTTERFLY), ("gem-free", Pattern.GEM))
READINGS = ("contains", "equals")


@dataclass
class Verdict:
    name: str
    holds: bool | None
    witness: object = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": self.witness, "detail": self.detail}


@dataclass
class ClassMembershipReport:
    verdicts: dict[str, Verdict] = field(default_factory=dict)
    p3_removal: dict[str, dict] = field(default_factory=dict)

    @property
    def all_pass(self) -> bool:
        return all(v.holds is True for v in self.verdicts.values())

    def to_json(self) -> dict:
        return {"all_pass": self.all_pass,
                "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
                "p3_removal": self.p3_removal}


def _neighbourhood_has_p3(g: Graph, v: int, reading: str) -> bool:
    nb = sorted(g.neighbors(v))
    if reading == "equals":
        if len(nb) != 3:
            return False
        inner = sum(g.has_edge(a, b) for a, b in combinations(nb, 2))
        return inner == 2
    for a, b, c in combinations(nb, 3):
        inner = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)]
        if sum(inner) == 2:
            return True
    return False


def p3_neighborhood_reduction(g: Graph, reading: str = "contains") -> tuple[Graph, set[int], bool]:
    """Delete every vertex whose neighbourhood induces a P3; report bipartiteness of the rest.

    ``reading="contains"`` removes ``v`` when ``N(v)`` has an induced P3
    somewhere; ``"equals"`` only when ``N(v)`` is exactly a P3.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    removed = {v for v in g.vertices() if _neighbourhood_has_p3(g, v, reading)}
    residual, _ = g.without(removed)
    return residual, removed, is_bipartite(residual)[0]


def check_class_membership(g: Graph, hole_guard: int = 200,
                           hole_timeout: float | None = 60.0) -> ClassMembershipReport:
    report = ClassMembershipReport()
    for name, pat in PATTERN_VERDICTS:
        image = contains_induced(g, pat)
        report.verdicts[name] = Verdict(name, image is None, image)

    try:
        hole = find_odd_hole(g, max_vertices=hole_guard, timeout=hole_timeout)
        report.verdicts["odd-hole-free"] = Verdict("odd-hole-free", hole is None, hole)
    except SearchGuardError as exc:
        report.verdicts["odd-hole-free"] = Verdict("odd-hole-free", None, None, str(exc))

    planar, _ = is_planar(g)
    report.verdicts["planar"] = Verdict("planar", planar, None if planar else nonplanar_witness(g))

    heavy = next((v for v in g.vertices() if g.degree(v) > 4), None)
    report.verdicts["max-degree-4"] = Verdict("max-degree-4", heavy is None, heavy,
                                              "" if heavy is None else f"degree {g.degree(heavy)}")

    for reading in READINGS:
        residual, removed, bip = p3_neighborhood_reduction(g, reading)
        report.p3_removal[reading] = {"removed": len(removed), "residual_n": residual.n, "bipartite": bip}
    return report
