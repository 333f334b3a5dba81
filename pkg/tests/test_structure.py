import random

import pytest
from conftest import graphs
from hypothesis import given
from hypothesis import strategies as st
from oracles import brute_gamma_t, brute_in_class

from edim.families import complete, cycle, expand_family, path, star, trees
from edim.graph import GraphError, build_graph, empty_graph, is_tree
from edim.products import complete_multipartite
from edim.solver import edim_exact
from edim.structure import (
    CapExceeded,
    edge_twin_partition,
    in_class_G,
    is_total_dominating,
    minimum_total_dominating_set,
    satellites,
    total_domination_number,
    tree_stats,
    twin_deletion,
    twin_partition,
)

# six-cycle u1..u6 (vertices 0..5) with chords u2u6 and u3u5
CHORDED_C6 = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5), (2, 4)])


def qnq_graph(q=2, n=2, q2=2):
    """Cliques Q and Q' joined completely to an independent set N."""
    Q = list(range(q))
    N = list(range(q, q + n))
    Q2 = list(range(q + n, q + n + q2))
    pairs = [(a, b) for part in (Q, Q2) for i, a in enumerate(part) for b in part[i + 1:]]
    pairs += [(a, b) for a in Q + Q2 for b in N]
    return build_graph(q + n + q2, pairs), (Q, N, Q2)


def test_total_dominating_examples():
    assert is_total_dominating(cycle(4), [0, 1])
    assert not is_total_dominating(cycle(5), [0, 1])
    g = build_graph(3, [(0, 1)])
    assert not is_total_dominating(g, [0, 1, 2])


def test_total_domination_number_examples():
    assert total_domination_number(complete(2)) == 2
    assert total_domination_number(cycle(5)) == 3
    assert total_domination_number(empty_graph(3)) is None


def test_total_domination_cap():
    # gamma_t of P_n grows like n/2; ten disjoint P3 copies need 20
    g = expand_family("+".join(["P3"] * 10))
    with pytest.raises(CapExceeded):
        total_domination_number(g, cap=8)
    assert total_domination_number(g, cap=25) == 20


def test_minimum_total_dominating_set():
    s = minimum_total_dominating_set(cycle(6))
    assert len(s) == 4 and is_total_dominating(cycle(6), s)
    assert minimum_total_dominating_set(empty_graph(2)) is None


def test_class_g_examples():
    assert in_class_G(complete(4))
    assert in_class_G(complete_multipartite([2, 3]))
    assert not in_class_G(complete(1))
    assert not in_class_G(cycle(5))


def test_twin_examples_complete_and_bipartite():
    for n in range(2, 7):
        tp = twin_partition(complete(n))
        assert (tp.t, tp.t_prime, tp.f, tp.f_prime) == (n, n - 1, 0, 0)
    for m in (2, 3):
        for n in (2, 3):
            tp = twin_partition(complete_multipartite([m, n]))
            assert (tp.f, tp.f_prime, tp.t, tp.t_prime) == (m + n, m + n - 2, 0, 0)


def test_chorded_six_cycle():
    assert twin_partition(CHORDED_C6).classes() == ()
    reduced, _ = twin_deletion(CHORDED_C6)
    assert reduced == CHORDED_C6
    etp = edge_twin_partition(reduced)
    assert (etp.q, etp.q_prime) == (2, 1)
    assert etp.classes == (((1, 2), (4, 5)),)


def test_twin_deletion_examples():
    assert twin_deletion(complete(5))[0] == complete(1)
    reduced, mapping = twin_deletion(path(3))
    assert reduced == path(2) and mapping == {0: 0, 1: 1}
    k1 = twin_deletion(complete(4))[0]
    etp = edge_twin_partition(k1)
    assert (etp.q, etp.q_prime) == (0, 0)


def test_qnq_graph_reduces_to_path():
    g, (Q, N, Q2) = qnq_graph()
    tp = twin_partition(g)
    assert set(tp.true_classes) == {tuple(Q), tuple(Q2)}
    assert tp.false_classes == (tuple(N),)
    reduced, _ = twin_deletion(g)
    assert reduced.n == 3 and reduced.m == 2 and is_tree(reduced)
    etp = edge_twin_partition(reduced)
    assert (etp.q, etp.q_prime) == (2, 1)


def test_twin_deletion_rejects_foreign_representative():
    with pytest.raises(GraphError):
        twin_deletion(complete(3), {(0, 1, 2): 7})


def test_satellite_examples():
    assert sorted(satellites(star(3))) == [(0, 1), (0, 2), (0, 3)]
    assert satellites(cycle(5)) == []
    assert satellites(complete(4)) == []


def test_tree_stats_examples():
    s = tree_stats(star(4))
    assert (s.n1, s.ex, s.is_path) == (4, 1, False)
    s = tree_stats(path(5))
    assert (s.n1, s.ex, s.is_path) == (2, 0, True)
    spider = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    s = tree_stats(spider)
    assert (s.n1, s.ex) == (3, 1)
    double_star = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    s = tree_stats(double_star)
    assert (s.n1, s.ex) == (5, 2)


def test_tree_stats_rejects_non_tree():
    with pytest.raises(GraphError):
        tree_stats(cycle(4))
    with pytest.raises(GraphError):
        tree_stats(empty_graph(2))


@given(graphs(max_n=7))
def test_gamma_t_matches_oracle(g):
    assert total_domination_number(g, cap=g.n + 1) == brute_gamma_t(g)


@given(graphs(max_n=7))
def test_class_g_matches_oracle(g):
    assert in_class_G(g) == brute_in_class(g)
    if in_class_G(g):
        assert total_domination_number(g) == 2


@given(graphs(max_n=8))
def test_twin_relations(g):
    tp = twin_partition(g)
    false_of = {v: c for c in tp.false_classes for v in c}
    true_of = {v: c for c in tp.true_classes for v in c}
    assert not set(false_of) & set(true_of)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            same_open = set(g.adjacency[u]) == set(g.adjacency[v])
            same_closed = set(g.adjacency[u]) | {u} == set(g.adjacency[v]) | {v}
            assert same_open == (u in false_of and v in false_of[u])
            assert same_closed == (u in true_of and v in true_of[u])
            if same_open:
                assert not g.has_edge(u, v)
            if same_closed:
                assert g.has_edge(u, v)


@given(graphs(min_n=2, max_n=8))
def test_edge_twin_classes(g):
    etp = edge_twin_partition(g)
    seen = set()
    for cls in etp.classes:
        unions = {g.closed_mask(u) | g.closed_mask(v) for u, v in cls}
        assert len(unions) == 1 and len(cls) >= 2
        assert not seen & set(cls)
        seen |= set(cls)


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_twin_deletion_invariance(g, rnd):
    base, _ = twin_deletion(g)
    ref = edge_twin_partition(base)
    classes = twin_partition(g).classes()
    for _ in range(10):
        reps = {c: rnd.choice(c) for c in classes}
        other = edge_twin_partition(twin_deletion(g, reps)[0])
        assert (other.q, other.q_prime) == (ref.q, ref.q_prime)


@given(graphs(max_n=8))
def test_satellites_are_strict_containments(g):
    got = set(satellites(g))
    for u in range(g.n):
        for v in range(g.n):
            cu, cv = g.closed_mask(u), g.closed_mask(v)
            assert ((u, v) in got) == (u != v and cv & ~cu == 0 and cv != cu)


@pytest.mark.parametrize("n", range(2, 9))
def test_tree_stats_consistent_with_solver(n):
    for t in trees(n):
        st_ = tree_stats(t)
        assert st_.n1 >= 2
        if not st_.is_path:
            assert st_.ex >= 1
        expected = 1 if st_.is_path else st_.n1 - st_.ex
        assert edim_exact(t).value == expected


def test_random_twin_deletion_keeps_other_vertices():
    rnd = random.Random(3)
    g, _ = qnq_graph(3, 2, 2)
    reps = {c: rnd.choice(c) for c in twin_partition(g).classes()}
    reduced, mapping = twin_deletion(g, reps)
    assert sorted(mapping) == sorted(reps.values())
