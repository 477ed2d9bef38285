"""Immutable simple undirected graphs on vertices ``0..n-1`` and their text formats."""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when a textual graph encoding cannot be parsed.

    ``offset`` is the zero-based byte/character offset of the offending input
    (or -1 when the error concerns the whole input).
    """

    def __init__(self, message: str, offset: int = -1):
        super().__init__(f"{message} (at offset {offset})" if offset >= 0 else message)
        self.offset = offset


class Graph:
    """Simple undirected graph with dense integer vertex ids.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; duplicate edges
    given to the constructor collapse into one, loops are rejected.
    """

    __slots__ = ("n", "edges", "_adj", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        adj: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {(u, v)} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            norm.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = frozenset(norm)
        self._adj = tuple(frozenset(s) for s in adj)
        self._masks = None

    # -- queries ---------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    @property
    def adj_masks(self) -> tuple[int, ...]:
        """Neighbourhoods as integer bitmasks, computed lazily."""
        if self._masks is None:
            masks = []
            for nb in self._adj:
                m = 0
                for u in nb:
                    m |= 1 << u
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    # -- derived graphs ---------------------------------------------------
    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the subgraph induced by ``vertices`` and the list mapping new ids to old ids."""
        old = sorted(set(vertices))
        index = {v: i for i, v in enumerate(old)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(old), edges), old

    def without(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for u in self._adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- dunder -------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def disjoint_union(*graphs: Graph) -> tuple[Graph, list[int]]:
    """Disjoint union; also returns the vertex offset of each operand."""
    offsets, edges, n = [], [], 0
    for g in graphs:
        offsets.append(n)
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return Graph(n, edges), offsets


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def save_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no ``>>graph6<<`` header, no trailing newline)."""
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    bits.extend([0] * (-len(bits) % 6))
    out = [_encode_n(g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def load_graph6(text: str) -> Graph:
    """Decode one graph6 string (an optional ``>>graph6<<`` header is accepted)."""
    s = text.strip("\r\n")
    start = 0
    if s.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {s[i]!r}", i)
    if start >= len(s):
        raise GraphFormatError("empty graph6 string", start)
    pos = start
    if s[pos] != "~":
        n = ord(s[pos]) - 63
        pos += 1
    else:
        width = 6 if s[pos + 1:pos + 2] == "~" else 3
        pos += 1 if width == 3 else 2
        if len(s) < pos + width:
            raise GraphFormatError("truncated graph6 size field", len(s))
        n = 0
        for ch in s[pos:pos + width]:
            n = (n << 6) | (ord(ch) - 63)
        pos += width
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise GraphFormatError(f"expected {need} adjacency bytes for n={n}, got {len(body)}",
                               pos + min(len(body), need))
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    # padding bits must be zero in canonical graph6
    if nbits % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise GraphFormatError("non-zero padding bits", pos + need - 1)
    return Graph(n, edges)


def iter_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield load_graph6(line.strip())


# ---------------------------------------------------------------------------
# adjacency-list text ("n m" header, then one "u v" line per edge)
# ---------------------------------------------------------------------------

def save_adjlist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edge_list())
    return "\n".join(lines) + "\n"


def load_adjlist(text: str) -> Graph:
    rows = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append((offset, stripped))
        offset += len(raw)
    if not rows:
        raise GraphFormatError("empty adjacency text", 0)
    head_off, head = rows[0]
    parts = head.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise GraphFormatError("header must be 'n m'", head_off)
    n, m = int(parts[0]), int(parts[1])
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}", head_off)
    edges = []
    for off, row in rows[1:]:
        p = row.split()
        if len(p) != 2 or not all(x.lstrip("-").isdigit() for x in p):
            raise GraphFormatError(f"bad edge line {row!r}", off)
        u, v = int(p[0]), int(p[1])
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge {u} {v}", off)
        edges.append((u, v))
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "G", labels: dict[int, str] | None = None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    lines.extend(f"  {u} -- {v};" for u, v in g.edge_list())
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph_text(text: str) -> Graph:
    """Sniff graph6 vs adjacency-list text."""
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    if not first:
        raise GraphFormatError("empty input", 0)
    if len(first.split()) == 2:
        return load_adjlist(text)
    return load_graph6(first)
