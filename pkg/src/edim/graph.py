"""Simple undirected graphs on dense integer vertices, plus hop distances."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

# Compares greater than every hop count and equal to itself.
UNREACHABLE = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input."""


class Edge(NamedTuple):
    u: int
    v: int


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def open_mask(self, v: int) -> int:
        return self.masks[v]

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def edge_index(self, u: int, v: int) -> int:
        """Position of edge uv in the sorted edge list."""
        key = Edge(min(u, v), max(u, v))
        lo, hi = 0, len(self.edges)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.edges[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(self.edges) or self.edges[lo] != key:
            raise GraphError(f"{key} is not an edge")
        return lo

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [tuple(e) for e in self.edges]


def build_graph(n: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Normalize an edge list into a :class:`Graph`.

    Reversed and repeated pairs collapse to one edge. Self-loops and
    endpoints outside ``0..n-1`` raise :class:`GraphError`.
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    seen: set[Edge] = set()
    for pair in edge_pairs:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        seen.add(Edge(min(u, v), max(u, v)))
    edges = tuple(sorted(seen))
    nbrs: list[list[int]] = [[] for _ in range(n)]
    masks = [0] * n
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(n, edges, adjacency, tuple(masks))


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return build_graph(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertices")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[float, ...], ...]

    def __call__(self, u: int, v: int) -> float:
        return self.dist[u][v]

    def diameter(self) -> float:
        return max((max(row) for row in self.dist), default=0)


def bfs(g: Graph, source: int) -> list[float]:
    dist: list[float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in g.adjacency[x]:
            if dist[y] == UNREACHABLE:
                dist[y] = dx
                queue.append(y)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs(g, s)) for s in range(g.n)))


def vertex_edge_distance(d: DistanceMatrix, e: Sequence[int], w: int) -> float:
    u, v = e
    return min(d.dist[u][w], d.dist[v][w])


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def induced_subgraph(g: Graph, vertex_set: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertex_set``, relabeled 0..k-1 in increasing order.

    Returns the subgraph and the old-to-new index map.
    """
    keep = sorted(set(vertex_set))
    if not keep:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if keep[0] < 0 or keep[-1] >= g.n:
        raise GraphError("vertex set contains vertices outside the graph")
    remap = {old: new for new, old in enumerate(keep)}
    sub_edges = [(remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap]
    return build_graph(len(keep), sub_edges), remap


# --- text formats -----------------------------------------------------------


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``u v``.

    Blank lines and lines starting with ``#`` are ignored.
    """
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(r[0]), int(r[1])) for r in rows[1:] if len(r) == 2]
    except ValueError as exc:
        raise GraphError(f"non-integer token in edge list: {exc}") from None
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("every edge line must hold exactly two vertices")
    if len(pairs) != m:
        raise GraphError(f"header announces {m} edges but {len(pairs)} were given")
    return build_graph(n, pairs)


def _g6_size(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    if n < 68719476736:
        return [63, 63] + [(n >> s) & 63 for s in range(30, -1, -6)]
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no ``>>graph6<<`` header)."""
    bits = []
    for v in range(1, g.n):
        mask = g.masks[v]
        for u in range(v):
            bits.append(mask >> u & 1)
    bits.extend([0] * (-len(bits) % 6))
    data = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in _g6_size(g.n) + data)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(x < 0 or x > 63 for x in vals):
        raise GraphError("graph6 string contains characters outside '?'..'~'")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] != 63:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size field")
        n, pos = (vals[1] << 12) | (vals[2] << 6) | vals[3], 4
    else:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size field")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    need = n * (n - 1) // 2
    if len(vals) - pos != (need + 5) // 6:
        raise GraphError(f"graph6 body has {len(vals) - pos} bytes, expected {(need + 5) // 6}")
    pairs = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = vals[pos + k // 6]
            if byte >> (5 - k % 6) & 1:
                pairs.append((u, v))
            k += 1
    return build_graph(n, pairs)


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return parse_graph6(text.strip().splitlines()[0] if text.strip() else "")
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise GraphError(f"unknown graph format {fmt!r}")
