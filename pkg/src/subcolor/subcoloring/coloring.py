"""Two-colour assignments, cluster-graph checks and saturation."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from ..core.graph import Graph


class Color(enum.IntEnum):
    RED = 0
    BLUE = 1

    @property
    def other(self) -> "Color":
        return Color(1 - self)


RED, BLUE = Color.RED, Color.BLUE


@dataclass(frozen=True)
class Subcoloring:
    """Total map vertex -> colour; validity against a graph is checked separately."""

    colors: tuple[Color, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(Color(c) for c in self.colors))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> Color:
        return self.colors[v]

    @classmethod
    def from_classes(cls, n: int, red: Iterable[int], blue: Iterable[int]) -> "Subcoloring":
        colors: list[Color | None] = [None] * n
        for v in red:
            colors[v] = RED
        for v in blue:
            if colors[v] is not None:
                raise ValueError(f"vertex {v} listed in both colour classes")
            colors[v] = BLUE
        missing = [v for v, c in enumerate(colors) if c is None]
        if missing:
            raise ValueError(f"colouring is not total; missing {missing}")
        return cls(tuple(colors))

    def color_class(self, c: Color) -> list[int]:
        return [v for v, x in enumerate(self.colors) if x == c]

    def swapped(self) -> "Subcoloring":
        return Subcoloring(tuple(c.other for c in self.colors))

    def restrict(self, vertices: Iterable[int]) -> "Subcoloring":
        return Subcoloring(tuple(self.colors[v] for v in vertices))

    def to_json(self) -> dict:
        return {"red": self.color_class(RED), "blue": self.color_class(BLUE)}

    @classmethod
    def from_json(cls, data: Mapping, n: int) -> "Subcoloring":
        return cls.from_classes(n, data.get("red", []), data.get("blue", []))


@dataclass(frozen=True)
class DefectBound:
    """Maximum induced degree allowed in the RED class (``a``) and BLUE class (``b``)."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("defect bounds must be non-negative")

    def for_color(self, c: Color) -> int:
        return self.a if c == RED else self.b


@dataclass(frozen=True)
class PartialAssignment:
    fixed: Mapping[int, Color] = field(default_factory=dict)
    must_be_unsaturated: frozenset[int] = frozenset()
    must_be_saturated: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "fixed", {int(v): Color(c) for v, c in self.fixed.items()})
        object.__setattr__(self, "must_be_unsaturated", frozenset(self.must_be_unsaturated))
        object.__setattr__(self, "must_be_saturated", frozenset(self.must_be_saturated))

    def check(self, g: Graph) -> None:
        for v in (*self.fixed, *self.must_be_unsaturated, *self.must_be_saturated):
            if not 0 <= v < g.n:
                raise ValueError(f"constraint refers to missing vertex {v}")

    def remap(self, index: Mapping[int, int]) -> "PartialAssignment":
        """Constraints translated through ``index`` (old id -> new id); unmapped vertices dropped."""
        return PartialAssignment(
            {index[v]: c for v, c in self.fixed.items() if v in index},
            frozenset(index[v] for v in self.must_be_unsaturated if v in index),
            frozenset(index[v] for v in self.must_be_saturated if v in index),
        )

    def to_json(self) -> dict:
        return {
            "fixed": {str(v): c.name.lower() for v, c in sorted(self.fixed.items())},
            "must_be_unsaturated": sorted(self.must_be_unsaturated),
            "must_be_saturated": sorted(self.must_be_saturated),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PartialAssignment":
        fixed = {int(v): Color[c.upper()] for v, c in data.get("fixed", {}).items()}
        return cls(fixed, frozenset(data.get("must_be_unsaturated", [])),
                   frozenset(data.get("must_be_saturated", [])))


NO_CONSTRAINTS = PartialAssignment()


def is_cluster_graph(g: Graph) -> bool:
    """True iff every connected component is a clique."""
    for comp in g.components():
        size = len(comp)
        for v in comp:
            if len(g.neighbors(v)) != size - 1:
                return False
    return True


def _class_mask(c: Subcoloring, color: Color) -> int:
    m = 0
    for v, x in enumerate(c.colors):
        if x == color:
            m |= 1 << v
    return m


def verify_2_subcoloring(g: Graph, c: Subcoloring) -> bool:
    """Both colour classes induce cluster graphs (no monochromatic induced P3)."""
    if len(c) != g.n:
        raise ValueError("colouring is not total on the graph")
    masks = g.adj_masks
    red = _class_mask(c, RED)
    for v in g.vertices():
        cls = red if c[v] == RED else ~red
        same = masks[v] & cls
        rest = same
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            if (same & ~low) & ~masks[u]:
                return False
            rest ^= low
    return True


def is_saturated(g: Graph, c: Subcoloring, v: int) -> bool:
    """Some neighbour of ``v`` shares its colour."""
    return any(c[u] == c[v] for u in g.neighbors(v))


def satisfies(g: Graph, c: Subcoloring, cons: PartialAssignment) -> bool:
    """``c`` honours fixed colours and saturation requirements of ``cons``."""
    return (all(c[v] == col for v, col in cons.fixed.items())
            and not any(is_saturated(g, c, v) for v in cons.must_be_unsaturated)
            and all(is_saturated(g, c, v) for v in cons.must_be_saturated))


def monochromatic_p3(g: Graph, c: Subcoloring) -> tuple[int, int, int] | None:
    for v in g.vertices():
        same = sorted(u for u in g.neighbors(v) if c[u] == c[v])
        for i, a in enumerate(same):
            for b in same[i + 1:]:
                if not g.has_edge(a, b):
                    return a, v, b
    return None
