"""Join, lexicographic, corona and complete multipartite constructions.

Vertex layouts are fixed so that results are reproducible:

* ``join(G, H)``: G keeps ``0..|G|-1``, H vertex ``h`` becomes ``|G| + h``.
* ``lexicographic(G, H)``: ``(g, h)`` becomes ``g * |H| + h``.
* ``corona(G, H)``: G keeps ``0..|G|-1``; vertex ``i`` of the copy hung on
  ``g`` becomes ``|G| + g * |H| + i``.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .graph import DistanceMatrix, Graph, GraphError, all_pairs_distances, build_graph, empty_graph


class LexVertex(NamedTuple):
    g: int
    h: int

    def flat(self, nh: int) -> int:
        return self.g * nh + self.h

    @classmethod
    def from_flat(cls, index: int, nh: int) -> LexVertex:
        return cls(*divmod(index, nh))


class CoronaVertex(NamedTuple):
    g: int
    # None for the vertex g of the base graph itself
    copy_index: int | None = None

    def flat(self, ng: int, nh: int) -> int:
        if self.copy_index is None:
            return self.g
        return ng + self.g * nh + self.copy_index

    @classmethod
    def from_flat(cls, index: int, ng: int, nh: int) -> CoronaVertex:
        if index < ng:
            return cls(index)
        return cls(*divmod(index - ng, nh))


def _require_nonempty(*graphs: Graph) -> None:
    for g in graphs:
        if g.n == 0:
            raise GraphError("product factors must have at least one vertex")


def join(g1: Graph, g2: Graph) -> Graph:
    _require_nonempty(g1, g2)
    s = g1.n
    pairs = list(g1.edges)
    pairs += [(u + s, v + s) for u, v in g2.edges]
    pairs += [(a, s + b) for a in range(g1.n) for b in range(g2.n)]
    return build_graph(g1.n + g2.n, pairs)


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    _require_nonempty(g1, g2)
    nh = g2.n
    pairs = []
    for g in range(g1.n):
        base = g * nh
        pairs += [(base + a, base + b) for a, b in g2.edges]
    for g, gp in g1.edges:
        pairs += [(g * nh + a, gp * nh + b) for a in range(nh) for b in range(nh)]
    return build_graph(g1.n * nh, pairs)


def h_layer(g: int, nh: int) -> list[int]:
    """Flat indices of the copy of H sitting over base vertex ``g``."""
    return list(range(g * nh, (g + 1) * nh))


def g_layer(h: int, ng: int, nh: int) -> list[int]:
    return [g * nh + h for g in range(ng)]


def lex_distance(
    dG: DistanceMatrix,
    g2: Graph,
    a: LexVertex,
    b: LexVertex,
    dH: DistanceMatrix | None = None,
) -> float:
    """Distance between ``a`` and ``b`` in G[H] from the factor distances.

    Inside one H-layer the distance is ``min(2, d_H)`` when the base vertex
    has a neighbor in G, and plain ``d_H`` when it is isolated in G.
    """
    if a.g != b.g:
        return dG.dist[a.g][b.g]
    if a.h == b.h:
        return 0
    if g2.has_edge(a.h, b.h):
        return 1
    if any(x == 1 for x in dG.dist[a.g]):
        return 2
    if dH is None:
        dH = all_pairs_distances(g2)
    return dH.dist[a.h][b.h]


def corona(g1: Graph, g2: Graph) -> Graph:
    _require_nonempty(g1, g2)
    ng, nh = g1.n, g2.n
    pairs = list(g1.edges)
    for g in range(ng):
        base = ng + g * nh
        pairs += [(base + a, base + b) for a, b in g2.edges]
        pairs += [(g, base + i) for i in range(nh)]
    return build_graph(ng + ng * nh, pairs)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts:
        raise GraphError("complete multipartite graph needs at least one part")
    if any(r < 1 for r in parts):
        raise GraphError(f"part sizes must be positive, got {list(parts)}")
    g = empty_graph(parts[-1])
    for r in reversed(parts[:-1]):
        g = join(empty_graph(r), g)
    return g


def lex_distance_matches_bfs(g1: Graph, g2: Graph) -> list[tuple[int, int, float, float]]:
    """Vertex pairs of G[H] where the closed form and BFS disagree."""
    prod = lexicographic(g1, g2)
    d_prod = all_pairs_distances(prod)
    dG, dH = all_pairs_distances(g1), all_pairs_distances(g2)
    nh = g2.n
    bad = []
    for x in range(prod.n):
        a = LexVertex.from_flat(x, nh)
        for y in range(prod.n):
            closed = lex_distance(dG, g2, a, LexVertex.from_flat(y, nh), dH)
            if closed != d_prod.dist[x][y]:
                bad.append((x, y, closed, d_prod.dist[x][y]))
    return bad
