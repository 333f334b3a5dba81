import itertools

import networkx as nx
import pytest
from conftest import connected_graphs, graphs
from hypothesis import given
from oracles import to_nx

from edim.families import complete, cycle, path, star
from edim.graph import GraphError, all_pairs_distances, build_graph, empty_graph, relabel
from edim.products import (
    CoronaVertex,
    LexVertex,
    complete_multipartite,
    corona,
    join,
    lex_distance,
    lex_distance_matches_bfs,
    lexicographic,
)
from edim.solver import edim_exact


def iso(a, b) -> bool:
    return nx.is_isomorphic(to_nx(a), to_nx(b))


def test_join_examples():
    assert join(complete(1), complete(1)) == complete(2)
    assert iso(join(empty_graph(2), empty_graph(3)), nx_bipartite(2, 3))
    wheel = join(complete(1), cycle(4))
    assert (wheel.n, wheel.m) == (5, 8)


def nx_bipartite(a, b):
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def test_lexicographic_examples():
    assert lexicographic(complete(2), complete(1)) == complete(2)
    p = lexicographic(path(3), empty_graph(2))
    assert (p.n, p.m) == (6, 8)
    assert iso(lexicographic(complete(2), empty_graph(2)), cycle(4))


def test_lex_distance_examples():
    g2 = empty_graph(2)
    dG = all_pairs_distances(path(3))
    assert lex_distance(dG, g2, LexVertex(0, 1), LexVertex(0, 1)) == 0
    assert lex_distance(dG, g2, LexVertex(0, 0), LexVertex(2, 1)) == 2
    assert lex_distance(dG, g2, LexVertex(1, 0), LexVertex(1, 1)) == 2
    bfs = all_pairs_distances(lexicographic(path(3), g2))
    assert bfs(LexVertex(1, 0).flat(2), LexVertex(1, 1).flat(2)) == 2


def test_corona_examples():
    assert iso(corona(path(2), complete(1)), path(4))
    h = cycle(4)
    assert corona(complete(1), h) == join(complete(1), h)
    c = corona(path(3), complete(2))
    assert (c.n, c.m) == (9, 11)


def test_complete_multipartite_examples():
    assert complete_multipartite([1, 1, 1]) == complete(3)
    assert complete_multipartite([2, 3]) == nx_bipartite(2, 3)
    assert complete_multipartite([2, 2, 2]).m == 12


@pytest.mark.parametrize("parts", [[], [2, 0], [0]])
def test_complete_multipartite_rejects(parts):
    with pytest.raises(GraphError):
        complete_multipartite(parts)


@pytest.mark.parametrize("build", [join, lexicographic, corona])
def test_products_reject_empty_factor(build):
    with pytest.raises(GraphError):
        build(empty_graph(0), path(2))
    with pytest.raises(GraphError):
        build(path(2), empty_graph(0))


def test_vertex_indexing_bijective():
    ng, nh = 4, 3
    assert [LexVertex.from_flat(i, nh).flat(nh) for i in range(ng * nh)] == list(range(ng * nh))
    total = ng + ng * nh
    assert [CoronaVertex.from_flat(i, ng, nh).flat(ng, nh) for i in range(total)] == list(range(total))
    assert CoronaVertex.from_flat(ng + nh + 1, ng, nh) == CoronaVertex(1, 1)


@given(graphs(max_n=5), graphs(max_n=5))
def test_lexicographic_matches_networkx(g, h):
    ours = lexicographic(g, h)
    ref = nx.lexicographic_product(to_nx(g), to_nx(h))
    mapped = {(a, b) for a, b in ref.edges()}
    for (g1, h1), (g2, h2) in mapped:
        assert ours.has_edge(LexVertex(g1, h1).flat(h.n), LexVertex(g2, h2).flat(h.n))
    assert ours.m == ref.number_of_edges()


@given(connected_graphs(min_n=2, max_n=6), graphs(max_n=5))
def test_lex_distance_agrees_with_bfs(g, h):
    assert lex_distance_matches_bfs(g, h) == []


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=5))
def test_join_is_symmetric(g, h):
    gh, hg = join(g, h), join(h, g)
    swap = [v + h.n if v < g.n else v - g.n for v in range(gh.n)]
    assert relabel(gh, swap) == hg
    assert edim_exact(gh).value == edim_exact(hg).value


@given(graphs(min_n=1, max_n=5), graphs(min_n=1, max_n=4))
def test_corona_edge_count(g, h):
    assert corona(g, h).m == g.m + g.n * h.m + g.n * h.n


@given(graphs(min_n=1, max_n=3), graphs(min_n=1, max_n=3), graphs(min_n=1, max_n=3))
def test_lexicographic_associative(a, b, c):
    left = lexicographic(lexicographic(a, b), c)
    right = lexicographic(a, lexicographic(b, c))
    # (x, y, z) has the same flat index x*|B||C| + y*|C| + z on both sides
    assert left == right


def test_multipartite_edge_counts():
    for parts in ([1, 2], [3, 1, 2], [2, 2, 2, 1], [4, 5]):
        expected = sum(a * b for a, b in itertools.combinations(parts, 2))
        assert complete_multipartite(parts).m == expected


def test_star_is_k1n():
    assert complete_multipartite([1, 3]) == star(3)
