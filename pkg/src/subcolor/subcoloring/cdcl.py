"""Small conflict-driven clause-learning SAT solver.

Literals use the DIMACS convention: variable ``v`` (1-based) is ``v`` when
true and ``-v`` when false.  Two watched literals, first-UIP learning,
activity-based branching with phase saving and Luby restarts.  Learned clauses
are kept; instances here are a few thousand clauses at most.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Sequence


def _luby(i: int) -> int:
    """``i``-th term (0-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i %= size
    return 1 << seq


class CDCL:
    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]]):
        self.nv = num_vars
        self.val = [0] * (num_vars + 1)          # 1 true, -1 false, 0 free
        self.level = [0] * (num_vars + 1)
        self.reason: list[int] = [-1] * (num_vars + 1)
        self.phase = [-1] * (num_vars + 1)
        self.act = [0.0] * (num_vars + 1)
        self.inc = 1.0
        self.heap = [(0.0, v) for v in range(1, num_vars + 1)]
        self.clauses: list[list[int]] = []
        self.watches: dict[int, list[int]] = {}
        self.trail: list[int] = []
        self.lim: list[int] = []
        self.qhead = 0
        self.ok = True
        for c in clauses:
            if not self._add(list(dict.fromkeys(c))):
                self.ok = False
                break

    # -- clause database ----------------------------------------------------
    def _add(self, c: list[int]) -> bool:
        if any(-l in c for l in c):
            return True
        if not c:
            return False
        if len(c) == 1:
            v = self._value(c[0])
            if v == -1:
                return False
            if v == 0:
                self._enqueue(c[0], -1)
            return True
        idx = len(self.clauses)
        self.clauses.append(c)
        self.watches.setdefault(c[0], []).append(idx)
        self.watches.setdefault(c[1], []).append(idx)
        return True

    def _value(self, lit: int) -> int:
        v = self.val[abs(lit)]
        return v if lit > 0 else -v

    def _enqueue(self, lit: int, reason: int) -> None:
        v = abs(lit)
        self.val[v] = 1 if lit > 0 else -1
        self.level[v] = len(self.lim)
        self.reason[v] = reason
        self.trail.append(lit)

    # -- propagation --------------------------------------------------------
    def _propagate(self) -> int:
        """Returns the index of a conflicting clause, or -1."""
        val, clauses, watches = self.val, self.clauses, self.watches
        while self.qhead < len(self.trail):
            false_lit = -self.trail[self.qhead]
            self.qhead += 1
            ws = watches.get(false_lit)
            if not ws:
                continue
            keep = []
            i = 0
            n = len(ws)
            while i < n:
                ci = ws[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], c[0]
                first = c[0]
                fv = val[abs(first)]
                if (fv if first > 0 else -fv) == 1:
                    keep.append(ci)
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    lv = val[abs(lk)]
                    if (lv if lk > 0 else -lv) != -1:
                        c[1], c[k] = lk, c[1]
                        watches.setdefault(lk, []).append(ci)
                        break
                else:
                    keep.append(ci)
                    if (fv if first > 0 else -fv) == -1:
                        keep.extend(ws[i:])
                        watches[false_lit] = keep
                        return ci
                    self._enqueue(first, ci)
            watches[false_lit] = keep
        return -1

    # -- learning -----------------------------------------------------------
    def _bump(self, v: int) -> None:
        self.act[v] += self.inc
        if self.act[v] > 1e100:
            self.act = [a * 1e-100 for a in self.act]
            self.inc *= 1e-100
            self.heap = [(-self.act[u], u) for u in range(1, self.nv + 1) if self.val[u] == 0]
            heapq.heapify(self.heap)
        elif self.val[v] == 0:
            heapq.heappush(self.heap, (-self.act[v], v))

    def _analyze(self, confl: int) -> tuple[list[int], int]:
        seen = [False] * (self.nv + 1)
        learnt = [0]
        counter = 0
        lit = 0
        idx = len(self.trail) - 1
        cur = len(self.lim)
        clause = self.clauses[confl]
        while True:
            for q in clause:
                if q == lit:
                    continue
                v = abs(q)
                if not seen[v] and self.level[v] > 0:
                    seen[v] = True
                    self._bump(v)
                    if self.level[v] >= cur:
                        counter += 1
                    else:
                        learnt.append(q)
            while not seen[abs(self.trail[idx])]:
                idx -= 1
            lit = self.trail[idx]
            idx -= 1
            seen[abs(lit)] = False
            counter -= 1
            if counter == 0:
                break
            clause = self.clauses[self.reason[abs(lit)]]
        learnt[0] = -lit
        self.inc *= 1.05
        if len(learnt) == 1:
            return learnt, 0
        j = max(range(1, len(learnt)), key=lambda i: self.level[abs(learnt[i])])
        learnt[1], learnt[j] = learnt[j], learnt[1]
        return learnt, self.level[abs(learnt[1])]

    def _backjump(self, lvl: int) -> None:
        if len(self.lim) <= lvl:
            return
        stop = self.lim[lvl]
        for lit in self.trail[stop:]:
            v = abs(lit)
            self.phase[v] = self.val[v]
            self.val[v] = 0
            self.reason[v] = -1
            heapq.heappush(self.heap, (-self.act[v], v))
        del self.trail[stop:]
        del self.lim[lvl:]
        self.qhead = len(self.trail)

    def _decide(self) -> int:
        while self.heap:
            _, v = heapq.heappop(self.heap)
            if self.val[v] == 0:
                return v if self.phase[v] > 0 else -v
        for v in range(1, self.nv + 1):
            if self.val[v] == 0:
                return v if self.phase[v] > 0 else -v
        return 0

    # -- main loop ----------------------------------------------------------
    def solve(self, max_conflicts: int | None = None) -> list[bool] | None:
        """A satisfying assignment (index 0 unused), or None when unsatisfiable.

        Raises ``TimeoutError`` if ``max_conflicts`` is exhausted.
        """
        if not self.ok:
            return None
        conflicts = 0
        restart_no = 0
        budget = 256 * _luby(restart_no)
        while True:
            confl = self._propagate()
            if confl >= 0:
                conflicts += 1
                if not self.lim:
                    self.ok = False
                    return None
                if max_conflicts is not None and conflicts > max_conflicts:
                    raise TimeoutError(f"conflict budget {max_conflicts} exhausted")
                learnt, back = self._analyze(confl)
                self._backjump(back)
                if len(learnt) == 1:
                    self._enqueue(learnt[0], -1)
                else:
                    self.clauses.append(learnt)
                    ci = len(self.clauses) - 1
                    self.watches.setdefault(learnt[0], []).append(ci)
                    self.watches.setdefault(learnt[1], []).append(ci)
                    self._enqueue(learnt[0], ci)
                budget -= 1
                continue
            if budget <= 0:
                restart_no += 1
                budget = 256 * _luby(restart_no)
                self._backjump(0)
                continue
            lit = self._decide()
            if lit == 0:
                return [False] + [self.val[v] > 0 for v in range(1, self.nv + 1)]
            self.lim.append(len(self.trail))
            self._enqueue(lit, -1)
