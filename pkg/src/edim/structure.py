"""Structural quantities of a single graph: total domination, class G,
vertex twins, twin edges, satellites and tree statistics."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Edge, Graph, GraphError, induced_subgraph, is_tree
from .hitting import bits, feasible, lexmin_hitting_set, mask_of, minimum_hitting_set

DEFAULT_GAMMA_CAP = 8


class CapExceeded(LookupError):
    """The total domination number is larger than the search cap."""


def is_total_dominating(g: Graph, s: Sequence[int]) -> bool:
    sm = mask_of(s)
    return all(g.masks[v] & sm for v in range(g.n))


def total_domination_number(g: Graph, cap: int = DEFAULT_GAMMA_CAP) -> int | None:
    """Minimum size of a total dominating set, or None when ``g`` has an
    isolated vertex (no such set exists).

    Raises :class:`CapExceeded` when the optimum is above ``cap``.
    """
    if any(m == 0 for m in g.masks):
        return None
    if g.n == 0:
        return 0
    # a vertex is totally dominated exactly by its open neighbourhood
    if not feasible(g.masks, cap):
        raise CapExceeded(f"total domination number exceeds cap {cap}")
    return minimum_hitting_set(g.masks, (1 << g.n) - 1).bit_count()


def minimum_total_dominating_set(g: Graph) -> list[int] | None:
    gamma = total_domination_number(g, cap=g.n)
    if gamma is None:
        return None
    return list(bits(lexmin_hitting_set(g.masks, (1 << g.n) - 1, gamma)))


def in_class_G(g: Graph) -> bool:
    """Every vertex u has a neighbour v such that {u, v} is a minimum total
    dominating set (which forces the total domination number to be 2)."""
    if g.n < 2 or any(m == 0 for m in g.masks):
        return False
    full = (1 << g.n) - 1
    return all(
        any(g.masks[u] | g.masks[v] == full for v in g.adjacency[u])
        for u in range(g.n)
    )


@dataclass(frozen=True)
class TwinPartition:
    false_classes: tuple[tuple[int, ...], ...]
    true_classes: tuple[tuple[int, ...], ...]

    @property
    def f(self) -> int:
        return sum(len(c) for c in self.false_classes)

    @property
    def f_prime(self) -> int:
        return self.f - len(self.false_classes)

    @property
    def t(self) -> int:
        return sum(len(c) for c in self.true_classes)

    @property
    def t_prime(self) -> int:
        return self.t - len(self.true_classes)

    def classes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.false_classes + self.true_classes))


def _group(keys: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    buckets: dict[int, list[int]] = defaultdict(list)
    for v, k in enumerate(keys):
        buckets[k].append(v)
    return tuple(sorted(tuple(b) for b in buckets.values() if len(b) > 1))


def twin_partition(g: Graph) -> TwinPartition:
    return TwinPartition(
        false_classes=_group([g.open_mask(v) for v in range(g.n)]),
        true_classes=_group([g.closed_mask(v) for v in range(g.n)]),
    )


def twin_deletion(
    g: Graph, representatives: Mapping[tuple[int, ...], int] | None = None
) -> tuple[Graph, dict[int, int]]:
    """Keep one vertex of every nontrivial twin class and drop the rest.

    By default the smallest vertex of each class survives; ``representatives``
    maps a class (as in :func:`twin_partition`) to another member to keep.
    Returns the reduced graph and the old-to-new index map of kept vertices.
    """
    representatives = representatives or {}
    drop: set[int] = set()
    for cls in twin_partition(g).classes():
        keep = representatives.get(cls, cls[0])
        if keep not in cls:
            raise GraphError(f"representative {keep} is not in twin class {cls}")
        drop.update(v for v in cls if v != keep)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


@dataclass(frozen=True)
class EdgeTwinPartition:
    classes: tuple[tuple[Edge, ...], ...]

    @property
    def q(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def q_prime(self) -> int:
        return self.q - len(self.classes)


def edge_twin_partition(g: Graph) -> EdgeTwinPartition:
    """Classes of edges uv sharing the union N[u] | N[v]."""
    buckets: dict[int, list[Edge]] = defaultdict(list)
    for e in g.edges:
        buckets[g.closed_mask(e.u) | g.closed_mask(e.v)].append(e)
    return EdgeTwinPartition(tuple(sorted(tuple(b) for b in buckets.values() if len(b) > 1)))


def satellites(g: Graph) -> list[tuple[int, int]]:
    """Pairs (u, v) where N[v] is a proper subset of N[u]."""
    out = []
    for u in range(g.n):
        cu = g.closed_mask(u)
        for v in g.adjacency[u]:
            cv = g.closed_mask(v)
            if cv & cu == cv and cv != cu:
                out.append((u, v))
    return out


@dataclass(frozen=True)
class TreeStats:
    n1: int
    ex: int
    is_path: bool
    terminal_degree: dict[int, int] = field(default_factory=dict, compare=False)


def tree_stats(g: Graph) -> TreeStats:
    """Leaf count and exterior major vertex count of a tree.

    A major vertex has degree at least 3. Walking inward from a leaf along
    degree-2 vertices, the first major vertex met is the unique closest one,
    so the leaf is terminal for it.
    """
    if not is_tree(g):
        raise GraphError("tree statistics need a tree")
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    terminal: dict[int, int] = defaultdict(int)
    for leaf in leaves:
        prev, cur = -1, leaf
        while True:
            if g.degree(cur) >= 3:
                terminal[cur] += 1
                break
            nxt = [w for w in g.adjacency[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
    is_path = all(g.degree(v) <= 2 for v in range(g.n))
    return TreeStats(len(leaves), len(terminal), is_path, dict(terminal))
