"""Exact edge metric dimension.

A vertex set S is an edge metric generator when every two edges differ in
distance to some member of S. Each unordered edge pair becomes one
constraint: the set of vertices that tell the two edges apart. A minimum
generator is then a minimum hitting set of those constraints, solved per
connected component and summed over components.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .graph import Graph, GraphError, all_pairs_distances, components, induced_subgraph
from .hitting import (
    SearchTimeout,
    bits,
    enumerate_hitting_sets,
    greedy_cover,
    lexmin_hitting_set,
    minimum_hitting_set,
    reduce_constraints,
)

EXACT = "EXACT"
GREEDY_UPPER = "GREEDY_UPPER"

# bits per numpy word when packing covering sets
_WORD = 62


def edge_distance_table(g: Graph) -> list[list[float]]:
    """``table[w][i]``: distance from vertex ``w`` to the ``i``-th edge."""
    d = all_pairs_distances(g).dist
    return [[min(d[w][u], d[w][v]) for u, v in g.edges] for w in range(g.n)]


def distinguishes(table: Sequence[Sequence[float]], w: int, e1: int, e2: int) -> bool:
    return table[w][e1] != table[w][e2]


class GeneratorCheck(NamedTuple):
    ok: bool
    # first pair of edge indices no member tells apart
    failing_pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_edge_metric_generator(g: Graph, s: Sequence[int]) -> GeneratorCheck:
    members = sorted(set(s))
    if not members:
        raise GraphError("an edge metric generator must be nonempty")
    if members[0] < 0 or members[-1] >= g.n:
        raise GraphError("generator contains vertices outside the graph")
    table = edge_distance_table(g)
    rows = [table[w] for w in members]
    for i, j in itertools.combinations(range(g.m), 2):
        if all(r[i] == r[j] for r in rows):
            return GeneratorCheck(False, (i, j))
    return GeneratorCheck(True)


def pair_constraints(g: Graph) -> list[int]:
    """Covering mask of every unordered edge pair, in (i, j) order."""
    m = g.m
    if m < 2:
        return []
    table = np.array(edge_distance_table(g))
    ii, jj = np.triu_indices(m, k=1)
    out = np.zeros(len(ii), dtype=object)
    for start in range(0, g.n, _WORD):
        block = table[start:start + _WORD]
        weights = np.left_shift(np.ones(len(block), dtype=np.int64), np.arange(len(block), dtype=np.int64))
        differ = block[:, ii] != block[:, jj]
        packed = weights @ differ.astype(np.int64)
        out += np.array([int(x) << start for x in packed.tolist()], dtype=object)
    return [int(x) for x in out]


@dataclass(frozen=True)
class EdimResult:
    value: int
    basis: tuple[int, ...]
    pairs_total: int
    method: str = EXACT
    all_bases: tuple[tuple[int, ...], ...] | None = None
    bases_capped: bool = False

    def to_dict(self) -> dict:
        out = {
            "edim": self.value,
            "basis": list(self.basis),
            "method": self.method,
            "pairs_total": self.pairs_total,
        }
        if self.all_bases is not None:
            out["all_bases"] = [list(b) for b in self.all_bases]
            out["bases_capped"] = self.bases_capped
        return out


class _Piece(NamedTuple):
    vertices: list[int]  # new index -> old index
    graph: Graph
    constraints: list[int]


def _pieces(g: Graph) -> list[_Piece]:
    out = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        out.append(_Piece(comp, sub, pair_constraints(sub)))
    return out


def _lift(piece: _Piece, mask: int) -> list[int]:
    return [piece.vertices[v] for v in bits(mask)]


def _piece_greedy(p: _Piece) -> int:
    if p.graph.m == 0:
        return 0
    if p.graph.m == 1:
        # single edge: no pairs, but a generator is nonempty
        return 1
    return greedy_cover(reduce_constraints(p.constraints), (1 << p.graph.n) - 1)


def _piece_exact(p: _Piece, deadline: float | None) -> int:
    if p.graph.m <= 1:
        return _piece_greedy(p)
    universe = (1 << p.graph.n) - 1
    cons = reduce_constraints(p.constraints)
    best = minimum_hitting_set(cons, universe, upper=greedy_cover(cons, universe), deadline=deadline)
    return lexmin_hitting_set(cons, universe, best.bit_count(), deadline=deadline)


def _pairs_total(g: Graph) -> int:
    return g.m * (g.m - 1) // 2


def edim_greedy_upper(g: Graph) -> EdimResult:
    basis: list[int] = []
    for p in _pieces(g):
        basis += _lift(p, _piece_greedy(p))
    return EdimResult(len(basis), tuple(sorted(basis)), _pairs_total(g), GREEDY_UPPER)


def edim_exact(g: Graph, time_budget: float | None = None) -> EdimResult:
    """Exact edge metric dimension with the lexicographically smallest basis.

    Components are solved independently and their values added. Edgeless
    components contribute 0 and single-edge components 1. With
    ``time_budget`` (seconds) exceeded, the greedy result is returned instead,
    marked ``GREEDY_UPPER``.
    """
    deadline = None if time_budget is None else time.monotonic() + time_budget
    basis: list[int] = []
    try:
        for p in _pieces(g):
            basis += _lift(p, _piece_exact(p, deadline))
    except SearchTimeout:
        return edim_greedy_upper(g)
    return EdimResult(len(basis), tuple(sorted(basis)), _pairs_total(g), EXACT)


def enumerate_all_minimum_bases(g: Graph, cap: int) -> tuple[list[tuple[int, ...]], bool]:
    """Every minimum edge metric basis (at most ``cap``), sorted, plus a flag
    telling whether the cap cut the list short."""
    per_piece: list[list[list[int]]] = []
    capped = False
    for p in _pieces(g):
        if p.graph.m == 0:
            per_piece.append([[]])
            continue
        if p.graph.m == 1:
            per_piece.append([[p.vertices[0]], [p.vertices[1]]])
            continue
        universe = (1 << p.graph.n) - 1
        size = _piece_exact(p, None).bit_count()
        masks, hit = enumerate_hitting_sets(p.constraints, universe, size, cap)
        capped |= hit
        per_piece.append([_lift(p, m) for m in masks])
    bases = []
    for combo in itertools.product(*per_piece):
        if len(bases) == cap:
            capped = True
            break
        bases.append(tuple(sorted(v for part in combo for v in part)))
    bases.sort()
    return bases, capped


def edim_with_bases(g: Graph, cap: int) -> EdimResult:
    res = edim_exact(g)
    bases, capped = enumerate_all_minimum_bases(g, cap)
    return EdimResult(res.value, res.basis, res.pairs_total, res.method, tuple(bases), capped)
