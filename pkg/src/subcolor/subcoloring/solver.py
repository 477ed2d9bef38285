"""Exact 2-subcolouring search.

A 2-colouring is a 2-subcolouring iff no induced P3 ``a - v - b`` is
monochromatic, so the search is a DPLL over "not all equal" triples with unit
propagation: once two vertices of a triple share a colour the third is forced
to the other one.  Saturation constraints add binary and at-least-one
propagators.  Branching is chronological and complete; this engine drives
enumeration.

Single-solution queries go through the same constraints encoded as CNF and a
clause-learning solver, which does not thrash on instances made of many
loosely coupled gadget copies.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

from ..core.graph import Graph
from .cdcl import CDCL
from .coloring import (NO_CONSTRAINTS, Color, PartialAssignment, Subcoloring,
                       satisfies, verify_2_subcoloring)

MAX_ENUM_N = 32


class EnumerationGuardError(ValueError):
    pass


class _Search:
    def __init__(self, g: Graph, cons: PartialAssignment):
        cons.check(g)
        n = g.n
        self.n = n
        self.nbrs = [sorted(g.neighbors(v)) for v in range(n)]
        self.deg = [len(nb) for nb in self.nbrs]
        tri_of: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for v in range(n):
            for a, b in combinations(self.nbrs[v], 2):
                if not g.has_edge(a, b):
                    tri_of[a].append((v, b))
                    tri_of[v].append((a, b))
                    tri_of[b].append((a, v))
        self.tri_of = tri_of
        self.unsat = [v in cons.must_be_unsaturated for v in range(n)]
        self.sat = [v in cons.must_be_saturated for v in range(n)]
        self.sat_watch = [[u for u in [v, *self.nbrs[v]] if self.sat[u]] for v in range(n)]
        self.color = [-1] * n
        self.assigned_nbrs = [0] * n
        self.trail: list[int] = []
        self.queue: list[int] = []
        self.cons = cons
        self.g = g

    # -- assignment / undo --------------------------------------------------
    def _assign(self, v: int, c: int) -> bool:
        cur = self.color[v]
        if cur >= 0:
            return cur == c
        self.color[v] = c
        self.trail.append(v)
        self.queue.append(v)
        for u in self.nbrs[v]:
            self.assigned_nbrs[u] += 1
        return True

    def _undo(self, mark: int) -> None:
        trail, color, cnt, nbrs = self.trail, self.color, self.assigned_nbrs, self.nbrs
        while len(trail) > mark:
            v = trail.pop()
            color[v] = -1
            for u in nbrs[v]:
                cnt[u] -= 1
        self.queue.clear()

    def _check_sat(self, s: int) -> bool:
        color = self.color
        cs = color[s]
        nb = self.nbrs[s]
        if not nb:
            return False
        if cs < 0:
            first = color[nb[0]]
            if first >= 0 and all(color[u] == first for u in nb):
                return self._assign(s, first)
            return True
        free = -1
        nfree = 0
        for u in nb:
            cu = color[u]
            if cu == cs:
                return True
            if cu < 0:
                free = u
                nfree += 1
        if nfree == 0:
            return False
        if nfree == 1:
            return self._assign(free, cs)
        return True

    def _propagate(self) -> bool:
        color, queue = self.color, self.queue
        while queue:
            v = queue.pop()
            c = color[v]
            for p, q in self.tri_of[v]:
                cp, cq = color[p], color[q]
                if cp == c:
                    if cq == c:
                        return False
                    if cq < 0 and not self._assign(q, 1 - c):
                        return False
                elif cq == c and cp < 0:
                    if not self._assign(p, 1 - c):
                        return False
            if self.unsat[v]:
                for u in self.nbrs[v]:
                    if not self._assign(u, 1 - c):
                        return False
            for u in self.nbrs[v]:
                if self.unsat[u] and not self._assign(u, 1 - c):
                    return False
            for s in self.sat_watch[v]:
                if not self._check_sat(s):
                    return False
        return True

    def _start(self) -> bool:
        for v, c in sorted(self.cons.fixed.items()):
            if not self._assign(v, int(c)):
                return False
        for s in range(self.n):
            if self.sat[s] and not self._check_sat(s):
                return False
        return self._propagate()

    def _select(self) -> int:
        best, key = -1, None
        color, cnt, deg = self.color, self.assigned_nbrs, self.deg
        for v in range(self.n):
            if color[v] < 0:
                k = (cnt[v], deg[v])
                if key is None or k > key:
                    best, key = v, k
        return best

    def _final_ok(self) -> bool:
        return all(not self.sat[s] or self._check_sat(s) for s in range(self.n))

    def _advance(self, frames: list[list[int]]) -> bool:
        while frames:
            frame = frames[-1]
            v, mark, k = frame
            self._undo(mark)
            if k >= 2:
                frames.pop()
                continue
            frame[2] = k + 1
            if self._assign(v, k) and self._propagate():
                return True
        return False

    def run(self) -> Iterator[list[int]]:
        if not self._start():
            return
        frames: list[list[int]] = []
        while True:
            v = self._select()
            if v < 0:
                if self._final_ok():
                    yield list(self.color)
                if not self._advance(frames):
                    return
                continue
            frames.append([v, len(self.trail), 0])
            if not self._advance(frames):
                return


def _to_subcoloring(colors: list[int]) -> Subcoloring:
    return Subcoloring(tuple(Color(c) for c in colors))


def subcoloring_cnf(g: Graph, constraints: PartialAssignment = NO_CONSTRAINTS
                    ) -> list[list[int]]:
    """CNF over variables ``v + 1`` (true = BLUE) equivalent to the constrained problem."""
    constraints.check(g)
    x = [v + 1 for v in range(g.n)]
    clauses: list[list[int]] = []
    for v in g.vertices():
        nb = sorted(g.neighbors(v))
        for a, b in combinations(nb, 2):
            if not g.has_edge(a, b):
                clauses.append([x[a], x[v], x[b]])
                clauses.append([-x[a], -x[v], -x[b]])
    for v, c in constraints.fixed.items():
        clauses.append([x[v] if c == Color.BLUE else -x[v]])
    for v in constraints.must_be_unsaturated:
        for u in g.neighbors(v):
            clauses.append([x[v], x[u]])
            clauses.append([-x[v], -x[u]])
    for s in constraints.must_be_saturated:
        nb = sorted(g.neighbors(s))
        clauses.append([-x[s]] + [x[u] for u in nb])
        clauses.append([x[s]] + [-x[u] for u in nb])
    return clauses


def solve_2_subcoloring(g: Graph, constraints: PartialAssignment = NO_CONSTRAINTS,
                        max_conflicts: int | None = None) -> Subcoloring | None:
    """A 2-subcolouring of ``g`` respecting ``constraints``, or None if none exists.

    Connected components are solved independently.  ``max_conflicts`` bounds
    the search per component; exceeding it raises ``TimeoutError``.
    """
    constraints.check(g)
    colors = [0] * g.n
    for comp in g.components():
        sub, old = g.induced_subgraph(comp)
        index = {v: i for i, v in enumerate(old)}
        model = CDCL(sub.n, subcoloring_cnf(sub, constraints.remap(index))).solve(max_conflicts)
        if model is None:
            return None
        for i, v in enumerate(old):
            colors[v] = int(model[i + 1])
    result = _to_subcoloring(colors)
    assert verify_2_subcoloring(g, result) and satisfies(g, result, constraints)
    return result


def enumerate_2_subcolorings(g: Graph, constraints: PartialAssignment = NO_CONSTRAINTS,
                             break_symmetry: bool = False,
                             max_vertices: int = MAX_ENUM_N) -> Iterator[Subcoloring]:
    """Yield every valid constrained 2-subcolouring exactly once.

    With ``break_symmetry`` vertex 0 is additionally pinned to RED, which keeps
    one colouring of each colour-swap pair when nothing else is fixed.
    """
    if g.n > max_vertices:
        raise EnumerationGuardError(f"enumeration refused for n={g.n} > {max_vertices}")
    if break_symmetry and g.n:
        fixed = dict(constraints.fixed)
        if fixed.get(0, Color.RED) != Color.RED:
            return
        fixed[0] = Color.RED
        constraints = PartialAssignment(fixed, constraints.must_be_unsaturated,
                                        constraints.must_be_saturated)
    for colors in _Search(g, constraints).run():
        yield _to_subcoloring(colors)
