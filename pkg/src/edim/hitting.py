"""Exact minimum hitting set over vertex bitmasks.

Every constraint is an int whose set bits are the vertices that satisfy it.
A solution is a mask meeting every constraint. All searches branch on the
constraint with the fewest remaining candidates; branch ``i`` takes the
``i``-th candidate and forbids the earlier ones, which partitions the
solution space, so enumeration never repeats a set.
"""

from __future__ import annotations

import time
from typing import Iterable, Iterator


class SearchTimeout(RuntimeError):
    pass


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def reduce_constraints(constraints: Iterable[int]) -> list[int]:
    """Drop duplicates and any constraint that contains another one."""
    uniq = sorted(set(constraints), key=lambda c: (c.bit_count(), c))
    kept: list[int] = []
    for c in uniq:
        if not any(k & c == k for k in kept):
            kept.append(c)
    return kept


def packing_bound(constraints: Iterable[int]) -> int:
    """Size of a greedy family of pairwise disjoint constraints."""
    used = 0
    count = 0
    for c in sorted(constraints, key=int.bit_count):
        if not c & used:
            used |= c
            count += 1
    return count


def greedy_cover(constraints: list[int], universe: int) -> int:
    """Repeatedly take the vertex meeting most open constraints; ties go low."""
    chosen = 0
    open_ = list(constraints)
    while open_:
        best_v, best_hits = -1, 0
        for v in bits(universe & ~chosen):
            b = 1 << v
            hits = sum(1 for c in open_ if c & b)
            if hits > best_hits:
                best_v, best_hits = v, hits
        if best_v < 0:
            raise ValueError("constraint set has no hitting set")
        b = 1 << best_v
        chosen |= b
        open_ = [c for c in open_ if not c & b]
    return chosen


class _Search:
    def __init__(self, deadline: float | None):
        self.deadline = deadline
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout("hitting set search exceeded its time budget")


def _restrict(constraints: Iterable[int], chosen: int, forbidden: int) -> list[int] | None:
    out = set()
    for c in constraints:
        if c & chosen:
            continue
        c &= ~forbidden
        if not c:
            return None
        out.add(c)
    return list(out)


def _min_search(cons: list[int], chosen: int, count: int, best: list, search: _Search) -> None:
    # best = [size, mask]; finds any solution strictly smaller than best[0]
    search.tick()
    if not cons:
        if count < best[0]:
            best[0], best[1] = count, chosen
        return
    floor = count + packing_bound(cons)
    if floor >= best[0]:
        return
    pivot = min(cons, key=lambda c: (c.bit_count(), c))
    excluded = 0
    for v in bits(pivot):
        b = 1 << v
        sub = _restrict(cons, b, excluded)
        excluded |= b
        if sub is None:
            continue
        _min_search(sub, chosen | b, count + 1, best, search)
        if floor >= best[0]:
            return


def minimum_hitting_set(
    constraints: Iterable[int],
    universe: int,
    *,
    upper: int | None = None,
    deadline: float | None = None,
) -> int:
    """Smallest mask within ``universe`` meeting every constraint.

    ``upper`` is a known feasible mask used as the incumbent.
    """
    cons = _restrict(constraints, 0, ~universe)
    if cons is None:
        raise ValueError("constraint set has no hitting set inside the universe")
    cons = reduce_constraints(cons)
    if upper is None:
        upper = greedy_cover(cons, universe)
    best = [upper.bit_count(), upper]
    _min_search(cons, 0, 0, best, _Search(deadline))
    return best[1]


def _exists(cons: list[int], budget: int, search: _Search) -> int | None:
    search.tick()
    if not cons:
        return 0
    if budget <= 0 or packing_bound(cons) > budget:
        return None
    pivot = min(cons, key=lambda c: (c.bit_count(), c))
    excluded = 0
    for v in bits(pivot):
        b = 1 << v
        sub = _restrict(cons, b, excluded)
        excluded |= b
        if sub is None:
            continue
        found = _exists(sub, budget - 1, search)
        if found is not None:
            return found | b
    return None


def feasible(
    constraints: Iterable[int],
    size: int,
    forced: int = 0,
    forbidden: int = 0,
    deadline: float | None = None,
) -> bool:
    """Is there a hitting set of at most ``size`` vertices that contains
    ``forced`` and avoids ``forbidden``?"""
    budget = size - forced.bit_count()
    if budget < 0:
        return False
    cons = _restrict(constraints, forced, forbidden)
    if cons is None:
        return False
    return _exists(reduce_constraints(cons), budget, _Search(deadline)) is not None


def lexmin_hitting_set(
    constraints: Iterable[int],
    universe: int,
    size: int,
    deadline: float | None = None,
) -> int:
    """Lexicographically smallest hitting set of exactly ``size`` vertices.

    ``size`` must be the optimum, so that every feasible set of that size is
    minimal. Sets compare as sorted tuples.
    """
    cons = reduce_constraints(constraints)
    chosen = 0
    forbidden = ~universe
    for v in bits(universe):
        if chosen.bit_count() == size:
            break
        b = 1 << v
        if feasible(cons, size, chosen | b, forbidden, deadline):
            chosen |= b
        else:
            forbidden |= b
    if chosen.bit_count() != size or _restrict(cons, chosen, 0):
        raise ValueError(f"no hitting set of size {size}")
    return chosen


def enumerate_hitting_sets(
    constraints: Iterable[int],
    universe: int,
    size: int,
    cap: int,
    deadline: float | None = None,
) -> tuple[list[int], bool]:
    """All hitting sets of exactly ``size`` vertices, at most ``cap`` of them.

    ``size`` must be the optimum. Returns the masks in ascending sorted-tuple
    order and a flag telling whether ``cap`` was hit.
    """
    cons = _restrict(constraints, 0, ~universe)
    found: list[int] = []
    if cons is None:
        return found, False
    cons = reduce_constraints(cons)
    search = _Search(deadline)

    class _Full(Exception):
        pass

    def rec(cons: list[int], chosen: int, count: int) -> None:
        search.tick()
        if not cons:
            if count == size:
                if len(found) == cap:
                    raise _Full
                found.append(chosen)
            return
        if count + packing_bound(cons) > size:
            return
        pivot = min(cons, key=lambda c: (c.bit_count(), c))
        excluded = 0
        for v in bits(pivot):
            b = 1 << v
            sub = _restrict(cons, b, excluded)
            excluded |= b
            if sub is not None:
                rec(sub, chosen | b, count + 1)

    capped = False
    try:
        rec(cons, 0, 0)
    except _Full:
        capped = True
    found.sort(key=lambda m: sorted(bits(m)))
    return found, capped
