"""Named graph families and a small text grammar for them.

Grammar (whitespace ignored)::

    expr  := term ('+' term)*              '+' is disjoint union
    term  := NAME INT? | NAME '(' args ')'
    args  := arg (',' arg)*
    arg   := expr | NUMBER | NAME '=' NUMBER

Families::

    P5, path(5)          path 0-1-2-3-4
    C5, cycle(5)         cycle 0-1-2-3-4-0
    K4, complete(4)      complete graph
    N3, empty(3)         edgeless graph
    S3, star(3)          K(1,3) with centre 0
    K(2,3), multipartite(2,3)
    W5, F5               wheel K1 v C5, fan K1 v P5 (hub is vertex 0)
    paw, diamond, claw   the usual small graphs
    gnp(6, 0.5, seed=7)  seeded Erdos-Renyi graph
    join(G,H), lex(G,H), corona(G,H)   products of sub-expressions
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from typing import Iterator

from .graph import Graph, GraphError, build_graph, disjoint_union, empty_graph, is_connected
from .products import complete_multipartite, corona, join, lexicographic

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_]+)|(?P<sym>[(),=+]))")


class FamilyError(GraphError):
    pass


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise FamilyError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gnp(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


_NAMED = {
    "paw": lambda: build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)]),
    "diamond": lambda: build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
    "claw": lambda: star(3),
}

_SIZED = {
    "P": path, "path": path,
    "C": cycle, "cycle": cycle,
    "K": complete, "complete": complete,
    "N": empty_graph, "empty": empty_graph,
    "S": star, "star": star,
    "W": lambda n: join(complete(1), cycle(n)), "wheel": lambda n: join(complete(1), cycle(n)),
    "F": lambda n: join(complete(1), path(n)), "fan": lambda n: join(complete(1), path(n)),
}

_PRODUCTS = {"join": join, "lex": lexicographic, "lexicographic": lexicographic, "corona": corona}


class _Parser:
    def __init__(self, text: str, default_seed: int):
        self.text = text
        self.default_seed = default_seed
        self.tokens = self._lex(text)
        self.pos = 0

    def _lex(self, text: str) -> list[tuple[str, str]]:
        out, i = [], 0
        while i < len(text):
            if text[i:].strip() == "":
                break
            mt = _TOKEN.match(text, i)
            if not mt:
                raise FamilyError(f"unexpected character {text[i:].strip()[0]!r} in {text!r}")
            kind = mt.lastgroup
            out.append((kind, mt.group(kind)))
            i = mt.end()
        return out

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, kind: str, value: str | None = None) -> str:
        tok = self.peek()
        if tok is None or tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            raise FamilyError(f"expected {want!r} at token {self.pos} of {self.text!r}")
        self.pos += 1
        return tok[1]

    def parse(self) -> Graph:
        g = self.expr()
        if self.peek() is not None:
            raise FamilyError(f"trailing input in {self.text!r}")
        return g

    def expr(self) -> Graph:
        g = self.term()
        while self.peek() == ("sym", "+"):
            self.pos += 1
            g = disjoint_union(g, self.term())
        return g

    def term(self) -> Graph:
        name = self.take("name")
        if self.peek() == ("sym", "("):
            self.pos += 1
            args, kwargs = self.args()
            self.take("sym", ")")
            return self.build(name, args, kwargs)
        # the lexer splits 'P5' into a name and a number
        tok = self.peek()
        if tok is not None and tok[0] == "num":
            return self.build(name, [self.number()], {})
        return self.build(name, [], {})

    def number(self) -> float | int:
        raw = self.take("num")
        return float(raw) if "." in raw else int(raw)

    def args(self) -> tuple[list, dict]:
        args: list = []
        kwargs: dict = {}
        while True:
            tok = self.peek()
            if tok is None:
                raise FamilyError(f"unclosed '(' in {self.text!r}")
            if tok[0] == "num":
                args.append(self.number())
            elif tok[0] == "name" and self.pos + 1 < len(self.tokens) and self.tokens[self.pos + 1] == ("sym", "="):
                key = self.take("name")
                self.take("sym", "=")
                kwargs[key] = self.number()
            else:
                args.append(self.expr())
            if self.peek() == ("sym", ","):
                self.pos += 1
                continue
            return args, kwargs

    def build(self, name: str, args: list, kwargs: dict) -> Graph:
        ints = [a for a in args if isinstance(a, int)]
        graphs = [a for a in args if isinstance(a, Graph)]
        if name in _PRODUCTS:
            if len(graphs) != 2 or len(args) != 2 or kwargs:
                raise FamilyError(f"{name} takes exactly two graph arguments")
            return _PRODUCTS[name](*graphs)
        if name == "gnp":
            if len(args) != 2 or not isinstance(args[0], int) or isinstance(args[1], Graph):
                raise FamilyError("gnp takes (n, p[, seed=s])")
            if set(kwargs) - {"seed"}:
                raise FamilyError("gnp accepts only the 'seed' keyword")
            n, p = args[0], float(args[1])
            if not 0.0 <= p <= 1.0:
                raise FamilyError(f"edge probability {p} outside [0, 1]")
            return gnp(n, p, int(kwargs.get("seed", self.default_seed)))
        if kwargs or graphs or len(ints) != len(args):
            raise FamilyError(f"{name} takes integer arguments only")
        if name in _NAMED:
            if args:
                raise FamilyError(f"{name} takes no arguments")
            return _NAMED[name]()
        if name in ("K", "multipartite") and (len(ints) > 1 or name == "multipartite"):
            return complete_multipartite(ints)
        if name in _SIZED:
            if len(ints) != 1:
                raise FamilyError(f"{name} takes one size argument")
            if ints[0] < 1 and name not in ("N", "empty", "S", "star"):
                raise FamilyError(f"{name} needs a positive size")
            return _SIZED[name](ints[0])
        raise FamilyError(f"unknown family {name!r}")


def expand_family(expr: str, seed: int = 0) -> Graph:
    """Build the graph named by ``expr``; ``seed`` is used by random
    families that do not carry their own."""
    return _Parser(expr.strip(), seed).parse()


# --- corpora ---------------------------------------------------------------


def _from_nx(g) -> Graph:
    import networkx as nx

    g = nx.convert_node_labels_to_integers(g)
    return build_graph(g.number_of_nodes(), g.edges())


@lru_cache(maxsize=None)
def atlas(max_n: int = 7) -> tuple[Graph, ...]:
    """All graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise FamilyError("the graph atlas stops at 7 vertices")
    return tuple(_from_nx(g) for g in nx.graph_atlas_g()[1:] if g.number_of_nodes() <= max_n)


def connected_graphs(min_n: int, max_n: int) -> list[Graph]:
    return [g for g in atlas(max_n) if min_n <= g.n and is_connected(g)]


def trees(n: int) -> Iterator[Graph]:
    """All trees on ``n`` vertices up to isomorphism."""
    import networkx as nx

    if n == 1:
        yield build_graph(1, [])
        return
    for t in nx.nonisomorphic_trees(n):
        yield _from_nx(t)


def random_connected(n: int, p: float, rng: random.Random, tries: int = 1000) -> Graph:
    """Seeded G(n, p) conditioned on connectivity (by rejection)."""
    for _ in range(tries):
        g = gnp(n, p, rng.randrange(2**31))
        if is_connected(g):
            return g
    # dense fallback keeps the corpus deterministic
    return path(n)
