"""Immutable simple graphs, text formats and elementary statistics.

Vertices are the integers ``0..n-1``. Adjacency is stored as one sorted tuple
of neighbours per vertex; every other module in the package consumes graphs
through this type.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphError",
    "GraphStats",
    "add_edge",
    "complete_bipartite",
    "complete_graph",
    "count_triangles",
    "cycle_graph",
    "disjoint_union",
    "encode_graph6",
    "girth",
    "is_connected",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "relabel",
    "remove_edge",
    "star_graph",
    "stats",
    "to_edge_list",
]


class GraphError(ValueError):
    """Invalid graph construction or malformed graph text."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for u, row in enumerate(self.adjacency):
            for i, v in enumerate(row):
                if not 0 <= v < self.n:
                    raise GraphError(f"vertex {u} lists out-of-range neighbour {v}")
                if v == u:
                    raise GraphError(f"self-loop at vertex {u}")
                if i and row[i - 1] >= v:
                    raise GraphError(f"neighbours of {u} not strictly increasing")
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u not in self.adjacency[v]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph on ``n`` vertices, rejecting loops and repeated edges."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(row) for row in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    degree_sequence: tuple[int, ...]
    m1: int
    m2: int
    triangles: int
    connected: bool
    bipartition: tuple[frozenset[int], frozenset[int]] | None
    # Witness for non-bipartite graphs: vertices of an odd cycle in order.
    odd_cycle: tuple[int, ...] | None = field(default=None)


# -- parsers and encoders ----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with ``#`` comments and an optional ``n=<int>`` first directive."""
    declared: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    first_content = True
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first_content and line.replace(" ", "").startswith("n="):
            value = line.replace(" ", "")[2:]
            if not value.isdigit():
                raise GraphError(f"line {lineno}: bad vertex-count directive {raw!r}")
            declared = int(value)
            first_content = False
            continue
        first_content = False
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        if declared is not None and max(u, v) >= declared:
            raise GraphError(f"line {lineno}: vertex {max(u, v)} >= declared n={declared}")
        seen.add(key)
        edges.append(key)
    if declared is not None:
        n = declared
    else:
        n = 1 + max((v for e in edges for v in e), default=-1)
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_G6_HEADER = ">>graph6<<"


def _g6_values(data: str) -> list[int]:
    out = []
    for i, ch in enumerate(data):
        c = ord(ch)
        if c < 63 or c > 126:
            raise GraphError(f"invalid graph6 character {ch!r} at offset {i}")
        out.append(c - 63)
    return out


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (header optional, trailing newline ignored)."""
    s = line.rstrip("\r\n")
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    vals = _g6_values(s)
    if not vals:
        raise GraphError("empty graph6 string")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 vertex count")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = (n << 6) | x
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 vertex count")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = (n << 6) | x
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = vals[pos:]
    if len(body) < nchars:
        raise GraphError(f"truncated graph6 adjacency: need {nchars} chars, got {len(body)}")
    if len(body) > nchars:
        raise GraphError(f"trailing garbage after graph6 adjacency ({len(body) - nchars} chars)")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6, without the optional header."""
    out = [_g6_size(g.n)]
    acc = nacc = 0
    for j in range(1, g.n):
        row = g.adjacency[j]
        for i in range(j):
            acc = (acc << 1) | (i in row)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# -- statistics ----------------------------------------------------------------


def _two_colour(g: Graph) -> tuple[list[int], tuple[int, ...] | None]:
    colour = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    # Tree paths from u and w meet at their lowest common ancestor.
                    left, right = [u], [w]
                    a, b = u, w
                    while depth[a] > depth[b]:
                        a = parent[a]
                        left.append(a)
                    while depth[b] > depth[a]:
                        b = parent[b]
                        right.append(b)
                    while a != b:
                        a, b = parent[a], parent[b]
                        left.append(a)
                        right.append(b)
                    right.pop()
                    return colour, tuple(left + right[::-1])
    return colour, None


def count_triangles(g: Graph) -> int:
    sets = [set(row) for row in g.adjacency]
    t = 0
    for u, v in g.edges():
        t += sum(1 for w in sets[u] & sets[v] if w > v)
    return t


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def stats(g: Graph) -> GraphStats:
    deg = g.degrees()
    colour, odd = _two_colour(g)
    if odd is None:
        bip = (
            frozenset(v for v in range(g.n) if colour[v] == 0),
            frozenset(v for v in range(g.n) if colour[v] == 1),
        )
    else:
        bip = None
    return GraphStats(
        n=g.n,
        m=g.m,
        degree_sequence=tuple(sorted(deg)),
        m1=sum(d * d for d in deg),
        m2=sum(deg[u] * deg[v] for u, v in g.edges()),
        triangles=count_triangles(g),
        connected=is_connected(g),
        bipartition=bip,
        odd_cycle=odd,
    )


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    c = dist[u] + dist[w] + 1
                    if best is None or c < best:
                        best = c
    return best


# -- builders ----------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete_graph needs n >= 1, got {n}")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with parts ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise GraphError(f"complete_bipartite needs a, b >= 1, got ({a}, {b})")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle_graph needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"path_graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """Star with centre 0 and ``leaves`` leaves."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add edge ({u}, {v}) to graph on {g.n} vertices")
    if g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) already present")
    return Graph.from_edges(g.n, [*g.edges(), (u, v)])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) not present")
    key = (min(u, v), max(u, v))
    return Graph.from_edges(g.n, [e for e in g.edges() if e != key])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = ((u + g.n, v + g.n) for u, v in h.edges())
    return Graph.from_edges(g.n + h.n, [*g.edges(), *shifted])


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
