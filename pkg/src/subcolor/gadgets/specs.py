"""Gadget specifications and their JSON form."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from ..core.graph import Graph

EDGE_TERMINALS = ("x1", "x2", "y1", "y2", "z1", "z2")
PORT_DEGREE_LIMIT = 3


class GadgetSpecError(ValueError):
    """A gadget specification violates one of its structural invariants."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class EdgeGadgetSpec:
    graph: Graph
    x1: int
    x2: int
    y1: int
    y2: int
    z1: int
    z2: int

    @property
    def terminals(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in EDGE_TERMINALS}

    def validate(self) -> None:
        t = list(self.terminals.values())
        if any(not 0 <= v < self.graph.n for v in t):
            raise GadgetSpecError("terminals-in-range", f"terminals {t} outside 0..{self.graph.n - 1}")
        if len(set(t)) != 6:
            raise GadgetSpecError("terminals-distinct", f"terminals {t} are not distinct")
        if not self.graph.is_connected():
            raise GadgetSpecError("connected", "edge gadget graph is disconnected")
        for name in ("x1", "x2"):
            if self.graph.degree(getattr(self, name)) > PORT_DEGREE_LIMIT:
                raise GadgetSpecError("identification-degree",
                                      f"{name} has internal degree > {PORT_DEGREE_LIMIT}")
        if any(self.graph.degree(v) > 4 for v in self.graph.vertices()):
            raise GadgetSpecError("max-degree", "edge gadget has a vertex of degree > 4")

    def to_json(self) -> dict:
        return {"kind": "edge", "n": self.graph.n, "edges": [list(e) for e in self.graph.edge_list()],
                "terminals": self.terminals}


@dataclass(frozen=True)
class VertexGadgetSpec:
    graph: Graph
    ports: tuple[int, ...]
    port_pairs: tuple[tuple[int, int], ...]

    @property
    def pair_count(self) -> int:
        return len(self.port_pairs)

    def validate(self) -> None:
        ports = list(self.ports)
        if any(not 0 <= v < self.graph.n for v in ports):
            raise GadgetSpecError("ports-in-range", f"ports {ports} outside 0..{self.graph.n - 1}")
        if len(set(ports)) != len(ports):
            raise GadgetSpecError("ports-distinct", f"ports {ports} are not distinct")
        paired = [v for pair in self.port_pairs for v in pair]
        if sorted(paired) != sorted(ports) or len(set(paired)) != len(paired):
            raise GadgetSpecError("pairs-partition-ports",
                                  f"pairs {list(self.port_pairs)} do not partition ports {ports}")
        for v in ports:
            if self.graph.degree(v) > PORT_DEGREE_LIMIT:
                raise GadgetSpecError("port-degree", f"port {v} has internal degree > {PORT_DEGREE_LIMIT}")

    def to_json(self) -> dict:
        return {"kind": "vertex", "n": self.graph.n, "edges": [list(e) for e in self.graph.edge_list()],
                "terminals": {"ports": list(self.ports), "pairs": [list(p) for p in self.port_pairs]}}


def gadget_from_json(data: Mapping) -> EdgeGadgetSpec | VertexGadgetSpec:
    kind = data.get("kind")
    graph = Graph(int(data["n"]), [tuple(e) for e in data["edges"]])
    terms = data["terminals"]
    if kind == "edge":
        missing = [t for t in EDGE_TERMINALS if t not in terms]
        if missing:
            raise GadgetSpecError("terminals-present", f"missing terminals {missing}")
        return EdgeGadgetSpec(graph, *(int(terms[t]) for t in EDGE_TERMINALS))
    if kind == "vertex":
        return VertexGadgetSpec(graph, tuple(int(p) for p in terms["ports"]),
                                tuple((int(a), int(b)) for a, b in terms["pairs"]))
    raise GadgetSpecError("kind", f"unknown gadget kind {kind!r}")


def load_gadget(path: str | Path) -> EdgeGadgetSpec | VertexGadgetSpec:
    return gadget_from_json(json.loads(Path(path).read_text()))


def dump_gadget(spec: EdgeGadgetSpec | VertexGadgetSpec) -> str:
    return json.dumps(spec.to_json())
