"""Command line front end.

Subcommands: compute, analyze, product, verify, generate. JSON output is one
object per line. Exit status is 0 on success, 1 on input or parse errors and
2 when a verification reports MISMATCH or VIOLATED.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence, TextIO

from . import families
from .graph import Graph, GraphError, is_tree, read_graph, write_graph
from .products import complete_multipartite, corona, join, lexicographic
from .solver import edim_exact, edim_greedy_upper, enumerate_all_minimum_bases
from .structure import (
    CapExceeded,
    DEFAULT_GAMMA_CAP,
    edge_twin_partition,
    in_class_G,
    satellites,
    total_domination_number,
    tree_stats,
    twin_deletion,
    twin_partition,
)
from .theorems import FAILING, THEOREMS, generate_instances, summarize, verify

FORMATS = ("edgelist", "graph6")

FAMILY_HELP = """\
family grammar:
  P5 C5 K4 N3 S3 W5 F5       path, cycle, complete, empty, star, wheel, fan
  K(2,3)                     complete multipartite
  paw diamond claw           small named graphs
  gnp(6,0.5,seed=7)          seeded random graph
  P3+K1                      disjoint union
  lex(P3,N2) join(..) corona(..)  products
"""


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    input: str | None = None
    family: str | None = None
    fmt: str = "edgelist"
    json: bool = False
    seed: int = 0
    basis_cap: int | None = None
    gamma_cap: int = DEFAULT_GAMMA_CAP
    time_budget_ms: int = 60_000
    greedy_only: bool = False
    timing: bool = True
    out: str = "-"
    product: str | None = None
    factors: list[str] = field(default_factory=list)
    theorem: str | None = None
    max_n: int = 8
    random: int = 0
    instances: list[str] = field(default_factory=list)
    trees: int | None = None
    connected: int | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits on its own otherwise
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edim", description="Edge metric dimension toolkit.",
                epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def graph_source(sp: argparse.ArgumentParser) -> None:
        src = sp.add_mutually_exclusive_group(required=True)
        src.add_argument("--input", help="graph file, '-' for stdin")
        src.add_argument("--family", help="inline family expression, e.g. 'K(2,3)'")
        sp.add_argument("--format", choices=FORMATS, default="edgelist", dest="fmt")

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--json", action="store_true", help="JSON lines output")
        sp.add_argument("--seed", type=int, default=0)

    c = sub.add_parser("compute", help="exact edge metric dimension")
    graph_source(c)
    common(c)
    c.add_argument("--all-bases", type=int, metavar="CAP", dest="basis_cap")
    c.add_argument("--greedy-only", action="store_true")
    c.add_argument("--time-budget-ms", type=int, default=60_000)
    c.add_argument("--no-timing", action="store_false", dest="timing", help="omit elapsed_ms (stable output)")

    a = sub.add_parser("analyze", help="twins, twin edges, total domination, satellites")
    graph_source(a)
    common(a)
    a.add_argument("--gamma-cap", type=int, default=DEFAULT_GAMMA_CAP)

    pr = sub.add_parser("product", help="build join/lex/corona/multipartite graphs",
                        epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    pr.add_argument("product", choices=("join", "lex", "corona", "multipartite"))
    pr.add_argument("factors", nargs="+", help="two family expressions, or part sizes for multipartite")
    pr.add_argument("--out", default="-")
    pr.add_argument("--format", choices=FORMATS, default="edgelist", dest="fmt")
    pr.add_argument("--seed", type=int, default=0)

    v = sub.add_parser("verify", help="check a closed form against the exact solver")
    v.add_argument("--theorem", choices=THEOREMS, required=True)
    v.add_argument("--max-n", type=int, default=8)
    v.add_argument("--random", type=int, default=0, metavar="COUNT")
    v.add_argument("--instance", action="append", default=[], dest="instances",
                   help="explicit instance, e.g. 'P3,N2' (repeatable)")
    v.add_argument("--cap", type=int, default=10**5, dest="basis_cap", help="basis enumeration cap")
    common(v)

    g = sub.add_parser("generate", help="emit a family graph or a corpus",
                       epilog=FAMILY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    g.add_argument("family", nargs="?")
    g.add_argument("--trees", type=int, metavar="N", help="all trees on N vertices")
    g.add_argument("--connected", type=int, metavar="N", help="all connected graphs on N vertices (N <= 7)")
    g.add_argument("--format", choices=FORMATS, default="graph6", dest="fmt")
    g.add_argument("--out", default="-")
    g.add_argument("--seed", type=int, default=0)
    return p


def parse_args(argv: Sequence[str]) -> RunConfig:
    ns = _build_parser().parse_args(list(argv))
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    if cfg.subcommand == "compute" and cfg.greedy_only and cfg.basis_cap is not None:
        raise UsageError("edim compute: --greedy-only cannot be combined with --all-bases")
    if cfg.subcommand == "generate":
        chosen = [x for x in (cfg.family, cfg.trees, cfg.connected) if x is not None]
        if len(chosen) != 1:
            raise UsageError("edim generate: give exactly one of FAMILY, --trees, --connected")
    if cfg.subcommand == "product":
        if cfg.product != "multipartite" and len(cfg.factors) != 2:
            raise UsageError(f"edim product {cfg.product}: needs exactly two factors")
    if cfg.subcommand == "verify" and cfg.max_n < 1:
        raise UsageError("edim verify: --max-n must be positive")
    return cfg


class _Writer:
    """Single output channel, so report order stays deterministic."""

    def __init__(self, stream: TextIO, as_json: bool):
        self.stream = stream
        self.as_json = as_json

    def emit(self, record: dict[str, Any], human: str) -> None:
        if self.as_json:
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(human.rstrip("\n") + "\n")


def _load(cfg: RunConfig) -> Graph:
    if cfg.family is not None:
        return families.expand_family(cfg.family, cfg.seed)
    if cfg.input == "-":
        text = sys.stdin.read()
    else:
        with open(cfg.input, encoding="utf-8") as fh:
            text = fh.read()
    return read_graph(text, cfg.fmt)


def _compute(cfg: RunConfig, out: _Writer) -> int:
    g = _load(cfg)
    start = time.perf_counter()
    if cfg.greedy_only:
        res = edim_greedy_upper(g)
    else:
        res = edim_exact(g, time_budget=cfg.time_budget_ms / 1000)
    record = {"n": g.n, "m": g.m, "seed": cfg.seed, **res.to_dict()}
    if cfg.basis_cap is not None and res.method == "EXACT":
        bases, capped = enumerate_all_minimum_bases(g, cfg.basis_cap)
        record["all_bases"] = [list(b) for b in bases]
        record["bases_capped"] = capped
    if cfg.timing:
        record["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    human = f"edim = {res.value} ({res.method})\nbasis = {list(res.basis)}\npairs = {res.pairs_total}"
    if "all_bases" in record:
        human += f"\nminimum bases: {len(record['all_bases'])}" + (" (capped)" if record["bases_capped"] else "")
    out.emit(record, human)
    return 0


def analyze_record(g: Graph, gamma_cap: int = DEFAULT_GAMMA_CAP) -> dict[str, Any]:
    tp = twin_partition(g)
    reduced, _ = twin_deletion(g)
    etp = edge_twin_partition(reduced)
    try:
        gamma: int | str | None = total_domination_number(g, gamma_cap)
    except CapExceeded:
        gamma = "CAP_EXCEEDED"
    record: dict[str, Any] = {
        "n": g.n,
        "m": g.m,
        "f": tp.f,
        "f_prime": tp.f_prime,
        "t": tp.t,
        "t_prime": tp.t_prime,
        "false_classes": [list(c) for c in tp.false_classes],
        "true_classes": [list(c) for c in tp.true_classes],
        "q": etp.q,
        "q_prime": etp.q_prime,
        "gamma_t": gamma,
        "in_class_G": in_class_G(g),
        "satellites": [list(p) for p in satellites(g)],
    }
    if is_tree(g):
        st = tree_stats(g)
        record["tree_stats"] = {"n1": st.n1, "ex": st.ex, "is_path": st.is_path}
    return record


def _analyze(cfg: RunConfig, out: _Writer) -> int:
    record = analyze_record(_load(cfg), cfg.gamma_cap)
    record["seed"] = cfg.seed
    human = "\n".join(f"{k}: {v}" for k, v in record.items())
    out.emit(record, human)
    return 0


def _write_text(path: str, text: str, stdout: TextIO) -> None:
    if path == "-":
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _product(cfg: RunConfig, stdout: TextIO) -> int:
    if cfg.product == "multipartite":
        try:
            parts = [int(x) for f in cfg.factors for x in f.split(",") if x.strip()]
        except ValueError:
            raise GraphError("multipartite factors must be integers") from None
        g = complete_multipartite(parts)
    else:
        a, b = (families.expand_family(f, cfg.seed) for f in cfg.factors)
        g = {"join": join, "lex": lexicographic, "corona": corona}[cfg.product](a, b)
    _write_text(cfg.out, write_graph(g, cfg.fmt), stdout)
    return 0


def _verify(cfg: RunConfig, out: _Writer) -> int:
    if cfg.instances:
        instances: list[Any] = list(cfg.instances)
    else:
        instances = generate_instances(cfg.theorem, cfg.max_n, cfg.random, cfg.seed)
    cap = cfg.basis_cap if cfg.basis_cap is not None else 10**5
    reports = verify(cfg.theorem, instances, seed=cfg.seed, cap=cap)
    for r in reports:
        human = f"[{r.verdict}] {r.theorem} {r.instance}: formula={r.formula_value} solver={r.solver_value}"
        if r.reasons:
            human += f" ({'; '.join(r.reasons)})"
        out.emit(r.to_dict(), human)
    counts = summarize(reports)
    out.emit({"summary": counts, "theorem": cfg.theorem, "seed": cfg.seed},
             "summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return 2 if any(r.verdict in FAILING for r in reports) else 0


def _generate(cfg: RunConfig, stdout: TextIO) -> int:
    if cfg.family is not None:
        graphs = [families.expand_family(cfg.family, cfg.seed)]
    elif cfg.trees is not None:
        graphs = list(families.trees(cfg.trees))
    else:
        graphs = families.connected_graphs(cfg.connected, cfg.connected)
    _write_text(cfg.out, "".join(write_graph(g, cfg.fmt) for g in graphs), stdout)
    return 0


def run(cfg: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out = _Writer(stdout, cfg.json)
    try:
        if cfg.subcommand == "compute":
            return _compute(cfg, out)
        if cfg.subcommand == "analyze":
            return _analyze(cfg, out)
        if cfg.subcommand == "product":
            return _product(cfg, stdout)
        if cfg.subcommand == "verify":
            return _verify(cfg, out)
        if cfg.subcommand == "generate":
            return _generate(cfg, stdout)
    except (OSError, GraphError) as exc:
        stderr.write(f"edim: {exc}\n")
        return 1
    stderr.write(f"edim: unknown subcommand {cfg.subcommand!r}\n")
    return 1


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return 1
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
