"""Closed forms for the edge metric dimension of products, and a verifier
that checks each one against the exact solver.

Formula functions only analyse the factors; they never solve the product.
A formula that only bounds the value returns :class:`LowerBound`.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterable, Sequence

from .families import FamilyError, atlas, expand_family, gnp, random_connected, trees
from .graph import Graph, GraphError, components, is_connected, is_tree
from .products import complete_multipartite, corona, h_layer, join, lexicographic
from .solver import edim_exact, enumerate_all_minimum_bases
from .structure import edge_twin_partition, in_class_G, satellites, tree_stats, twin_deletion, twin_partition

MATCH = "MATCH"
BOUND_HOLDS = "BOUND_HOLDS"
MISMATCH = "MISMATCH"
SKIPPED = "SKIPPED"
HOLDS = "HOLDS"
VIOLATED = "VIOLATED"
CAP_EXCEEDED = "CAP_EXCEEDED"

FAILING = (MISMATCH, VIOLATED)

THEOREMS = ("join", "multipartite", "lex", "corona", "corona-k1", "tree", "satellite")


class PreconditionError(ValueError):
    """The factors fall outside the hypotheses of a theorem."""


@dataclass(frozen=True)
class LowerBound:
    value: int

    def __str__(self) -> str:
        return f">={self.value}"


def _nontrivial(g: Graph, role: str) -> None:
    if g.n < 2:
        raise PreconditionError(f"{role} must have at least two vertices")


def edim_join_formula(g1: Graph, g2: Graph) -> int:
    _nontrivial(g1, "first factor")
    _nontrivial(g2, "second factor")
    if in_class_G(g1) or in_class_G(g2):
        return g1.n + g2.n - 1
    return g1.n + g2.n - 2


def edim_multipartite_formula(parts: Sequence[int]) -> int:
    if len(parts) < 2:
        raise PreconditionError("need at least two parts")
    if any(r < 1 for r in parts):
        raise PreconditionError("part sizes must be positive")
    if len(parts) == 2:
        return parts[0] + parts[1] - 2
    return sum(parts) - 1


def lex_terms(g1: Graph) -> dict[str, int]:
    """The twin statistics of the base graph used by the lexicographic form."""
    tp = twin_partition(g1)
    reduced, _ = twin_deletion(g1)
    return {"f_prime": tp.f_prime, "t_prime": tp.t_prime, "q_prime": edge_twin_partition(reduced).q_prime}


def _check_lex_hypotheses(g1: Graph, g2: Graph) -> None:
    small = [c for c in components(g1) if len(c) < 3]
    if g1.n == 0 or small:
        raise PreconditionError("every component of the first factor needs at least three vertices")
    _nontrivial(g2, "second factor")


def edim_lex_formula(g1: Graph, g2: Graph) -> int | LowerBound:
    _check_lex_hypotheses(g1, g2)
    t = lex_terms(g1)
    value = g1.n * (g2.n - 1) + t["f_prime"] + t["t_prime"] + t["q_prime"]
    return LowerBound(value) if in_class_G(g2) else value


def edim_corona_formula(g1: Graph, g2: Graph) -> int:
    if not is_connected(g1):
        raise PreconditionError("first factor must be connected")
    _nontrivial(g2, "second factor")
    return g1.n * (g2.n - 1)


def edim_corona_k1_bound(g: Graph) -> LowerBound:
    # the bound is the dimension of the base graph itself
    return LowerBound(edim_exact(g).value)


def edim_tree_formula(g: Graph) -> int:
    if not is_tree(g) or g.n < 2:
        raise PreconditionError("need a tree with at least two vertices")
    st = tree_stats(g)
    return 1 if st.is_path else st.n1 - st.ex


@dataclass
class SatelliteReport:
    verdict: str
    satellite_pairs: list[tuple[int, int]]
    bases_checked: int
    violations: list[dict] = field(default_factory=list)
    reason: str = ""


def check_satellite_lemma(g1: Graph, g2: Graph, cap: int = 10**5) -> SatelliteReport:
    """For a satellite pair (g, g') of the base graph, every minimum basis of
    G[H] must contain the whole H-layer over g or over g'."""
    try:
        _check_lex_hypotheses(g1, g2)
        if not in_class_G(g2):
            raise PreconditionError("second factor must be in class G")
    except PreconditionError as exc:
        return SatelliteReport(SKIPPED, [], 0, reason=str(exc))
    pairs = satellites(g1)
    if not pairs:
        return SatelliteReport(HOLDS, [], 0, reason="no satellites")
    bases, capped = enumerate_all_minimum_bases(lexicographic(g1, g2), cap)
    nh = g2.n
    layers = {g: set(h_layer(g, nh)) for g in range(g1.n)}
    violations = []
    for basis in bases:
        members = set(basis)
        for u, v in pairs:
            if not (layers[u] <= members or layers[v] <= members):
                violations.append({"basis": list(basis), "pair": [u, v]})
    if violations:
        verdict = VIOLATED
    else:
        verdict = CAP_EXCEEDED if capped else HOLDS
    return SatelliteReport(verdict, pairs, len(bases), violations)


# --- verification ------------------------------------------------------------


@dataclass
class TheoremReport:
    theorem: str
    instance: str
    preconditions_met: bool
    reasons: list[str] = field(default_factory=list)
    formula_value: int | None = None
    formula_kind: str | None = None  # "EXACT" or "LOWER_BOUND"
    solver_value: int | None = None
    verdict: str = SKIPPED
    seed: int | None = None
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _compare(report: TheoremReport, formula: int | LowerBound, solver_value: int) -> TheoremReport:
    report.solver_value = solver_value
    if isinstance(formula, LowerBound):
        report.formula_value, report.formula_kind = formula.value, "LOWER_BOUND"
        report.verdict = BOUND_HOLDS if solver_value >= formula.value else MISMATCH
    else:
        report.formula_value, report.formula_kind = formula, "EXACT"
        report.verdict = MATCH if solver_value == formula else MISMATCH
    return report


def _describe(g: Graph) -> str:
    return f"n={g.n} edges={[list(e) for e in g.edges]}"


def _as_graph(x: Any, seed: int) -> Graph:
    if isinstance(x, Graph):
        return x
    if isinstance(x, str):
        return expand_family(x, seed)
    raise GraphError(f"cannot read a graph from {x!r}")


def _pair(instance: Any, seed: int) -> tuple[Graph, Graph]:
    if isinstance(instance, str):
        instance = _split_top(instance)
    if len(instance) != 2:
        raise GraphError("instance must name exactly two factors")
    return _as_graph(instance[0], seed), _as_graph(instance[1], seed)


def _split_top(text: str) -> list[str]:
    """Split 'P3, N2' on top-level commas."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur)
    return [s.strip() for s in out]


def _label(instance: Any) -> str:
    if isinstance(instance, Graph):
        return _describe(instance)
    if isinstance(instance, (tuple, list)):
        return " | ".join(_label(x) for x in instance)
    return str(instance)


def verify_one(theorem: str, instance: Any, seed: int | None = None, cap: int = 10**5) -> TheoremReport:
    report = TheoremReport(theorem, _label(instance), False, seed=seed)
    s = 0 if seed is None else seed
    try:
        if theorem == "join":
            g, h = _pair(instance, s)
            solver_value = edim_exact(join(g, h)).value
            try:
                formula = edim_join_formula(g, h)
            except PreconditionError as exc:
                report.reasons.append(str(exc))
                report.solver_value = solver_value
                return report
            report.detail = {"G_in_class": in_class_G(g), "H_in_class": in_class_G(h)}
            report.preconditions_met = True
            return _compare(report, formula, solver_value)
        if theorem == "multipartite":
            parts = [int(x) for x in (instance.split(",") if isinstance(instance, str) else instance)]
            formula = edim_multipartite_formula(parts)
            report.preconditions_met = True
            return _compare(report, formula, edim_exact(complete_multipartite(parts)).value)
        if theorem == "lex":
            g, h = _pair(instance, s)
            formula = edim_lex_formula(g, h)
            report.preconditions_met = True
            report.detail = dict(lex_terms(g), H_in_class=in_class_G(h))
            return _compare(report, formula, edim_exact(lexicographic(g, h)).value)
        if theorem == "corona":
            g, h = _pair(instance, s)
            formula = edim_corona_formula(g, h)
            report.preconditions_met = True
            return _compare(report, formula, edim_exact(corona(g, h)).value)
        if theorem == "corona-k1":
            g = _as_graph(instance, s)
            bound = edim_corona_k1_bound(g)
            report.preconditions_met = True
            return _compare(report, bound, edim_exact(corona(g, expand_family("K1"))).value)
        if theorem == "tree":
            g = _as_graph(instance, s)
            formula = edim_tree_formula(g)
            st = tree_stats(g)
            report.preconditions_met = True
            report.detail = {"n1": st.n1, "ex": st.ex, "is_path": st.is_path}
            return _compare(report, formula, edim_exact(g).value)
        if theorem == "satellite":
            g, h = _pair(instance, s)
            sat = check_satellite_lemma(g, h, cap)
            report.preconditions_met = sat.verdict != SKIPPED
            if sat.reason:
                report.reasons.append(sat.reason)
            report.verdict = sat.verdict
            report.detail = {
                "satellite_pairs": [list(p) for p in sat.satellite_pairs],
                "bases_checked": sat.bases_checked,
                "violations": sat.violations[:10],
            }
            return report
        raise ValueError(f"unknown theorem {theorem!r}")
    except PreconditionError as exc:
        report.reasons.append(str(exc))
    except (GraphError, FamilyError, TypeError, ValueError) as exc:
        report.reasons.append(f"unusable instance: {exc}")
    return report


def _worker_count() -> int:
    try:
        return max(1, int(os.environ.get("EDIM_THREADS", "1")))
    except ValueError:
        return 1


def verify(
    theorem: str,
    instances: Iterable[Any],
    seed: int | None = None,
    cap: int = 10**5,
    workers: int | None = None,
) -> list[TheoremReport]:
    """One report per instance, in input order. ``EDIM_THREADS`` sets the
    default number of worker processes."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    items = list(instances)
    workers = workers or _worker_count()
    if workers <= 1 or len(items) < 2:
        return [verify_one(theorem, x, seed, cap) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify_one, itertools.repeat(theorem), items, itertools.repeat(seed), itertools.repeat(cap)))


# --- corpora -----------------------------------------------------------------


def _random_graph(rng: random.Random, n: int, connected: bool = False) -> Graph:
    p = rng.choice((0.3, 0.5, 0.7))
    if connected:
        return random_connected(n, p, rng)
    return gnp(n, p, rng.randrange(2**31))


def _lex_ok(g: Graph) -> bool:
    return g.n > 0 and all(len(c) >= 3 for c in components(g))


def generate_instances(theorem: str, max_n: int, random_count: int = 0, seed: int = 0) -> list[Any]:
    """Instances for ``theorem`` whose product (or graph) has at most
    ``max_n`` vertices. With ``random_count`` > 0 the corpus is that many
    seeded random instances, otherwise it is exhaustive over small graphs
    (factors up to 7 vertices)."""
    rng = random.Random(seed)
    small = atlas(min(max_n, 7)) if max_n >= 1 else ()

    if theorem == "multipartite":
        out = []
        for total in range(2, max_n + 1):
            for t in range(2, total + 1):
                out += [list(p) for p in _compositions(total, t)]
        return out

    if theorem in ("corona-k1",):
        if random_count:
            return [_random_graph(rng, rng.randint(1, max(1, max_n // 2)), connected=True) for _ in range(random_count)]
        return [g for g in small if is_connected(g) and 2 * g.n <= max_n]

    if theorem == "tree":
        return [t for n in range(2, max_n + 1) for t in trees(n)]

    if theorem == "join":
        if random_count:
            out = []
            while len(out) < random_count:
                a = rng.randint(2, max_n - 2)
                b = rng.randint(2, max_n - a)
                out.append((_random_graph(rng, a), _random_graph(rng, b)))
            return out
        return [(g, h) for g in small for h in small if g.n >= 2 and h.n >= 2 and g.n + h.n <= max_n]

    if theorem in ("lex", "satellite"):
        want_class = theorem == "satellite"
        bases = [g for g in small if g.n >= 3 and _lex_ok(g)]
        hs = [h for h in small if h.n >= 2 and (not want_class or in_class_G(h))]
        if random_count:
            out = []
            pool = [(g, h) for g in bases for h in hs if g.n * h.n <= max_n]
            if not pool:
                return []
            for _ in range(random_count):
                out.append(rng.choice(pool))
            return out
        return [(g, h) for g in bases for h in hs if g.n * h.n <= max_n]

    if theorem == "corona":
        if random_count:
            out = []
            while len(out) < random_count:
                ng = rng.randint(1, max(1, (max_n // 3)))
                nh_max = max_n // ng - 1
                if nh_max < 2:
                    continue
                nh = rng.randint(2, nh_max)
                out.append((_random_graph(rng, ng, connected=True), _random_graph(rng, nh)))
            return out
        return [
            (g, h)
            for g in small
            if is_connected(g)
            for h in small
            if h.n >= 2 and g.n * (1 + h.n) <= max_n
        ]

    raise ValueError(f"unknown theorem {theorem!r}")


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    """Ordered part vectors of positive sizes summing to ``total``."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def summarize(reports: Sequence[TheoremReport]) -> dict[str, int]:
    out: dict[str, int] = {}
    for r in reports:
        out[r.verdict] = out.get(r.verdict, 0) + 1
    return out

