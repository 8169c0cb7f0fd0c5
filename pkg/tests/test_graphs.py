import json

import pytest

from bicover.errors import ParseError, RangeError, SizeLimitExceeded
from bicover.graphs import (Graph, alpha_per_vertex, complete_graph, degrees,
                            empty_graph, greedy_coloring, parse_graph,
                            random_graph, serialize_graph)

PATH3 = Graph(3, [(1, 2), (2, 3)])
C5 = Graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


def brute_alpha(g):
    """Exhaustive per-vertex independence numbers over all 2^n subsets."""
    best = [1] * g.n
    for s in range(1, 1 << g.n):
        verts = [v + 1 for v in range(g.n) if (s >> v) & 1]
        if any(g.has_edge(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]):
            continue
        for v in verts:
            best[v - 1] = max(best[v - 1], len(verts))
    return best


def test_graph_validation():
    with pytest.raises(RangeError):
        Graph(3, [(1, 4)])
    with pytest.raises(RangeError):
        Graph(3, [(2, 2)])
    with pytest.raises(RangeError):
        Graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        Graph(0)


def test_degrees_examples():
    assert degrees(complete_graph(3)) == [2, 2, 2]
    assert degrees(empty_graph(4)) == [0, 0, 0, 0]
    assert degrees(PATH3) == [1, 2, 1]


def test_alpha_complete_and_empty():
    assert alpha_per_vertex(complete_graph(6)) == [1] * 6
    assert alpha_per_vertex(empty_graph(7)) == [7] * 7


def test_alpha_c5_matches_brute_force():
    assert brute_alpha(C5) == [2, 2, 2, 2, 2]
    assert alpha_per_vertex(C5) == [2, 2, 2, 2, 2]


@pytest.mark.parametrize("seed", range(12))
def test_alpha_matches_brute_force_small(seed):
    g = random_graph(9, (0.2, 0.5, 0.8)[seed % 3], seed)
    assert alpha_per_vertex(g) == brute_alpha(g)


@pytest.mark.parametrize("seed", range(3))
def test_alpha_matches_brute_force_n12(seed):
    g = random_graph(12, 0.5, seed)
    assert alpha_per_vertex(g) == brute_alpha(g)


def test_alpha_bounded_by_nonneighbors():
    for seed in range(8):
        g = random_graph(16, 0.4, seed)
        alphas = alpha_per_vertex(g)
        degs = degrees(g)
        assert all(1 <= a <= g.n - d for a, d in zip(alphas, degs))


def test_alpha_size_limit():
    with pytest.raises(SizeLimitExceeded):
        alpha_per_vertex(empty_graph(6), limit=5)
    assert alpha_per_vertex(empty_graph(41), limit=41) == [41] * 41


def test_random_graph_endpoints_and_determinism():
    assert random_graph(5, 0, 1).edge_count() == 0
    assert random_graph(5, 1, 1) == complete_graph(5)
    a = random_graph(30, 0.5, 7)
    b = random_graph(30, 0.5, 7)
    assert a == b
    assert a != random_graph(30, 0.5, 8)
    with pytest.raises(ValueError):
        random_graph(5, 1.2, 0)


def test_greedy_coloring_examples():
    assert greedy_coloring(empty_graph(3)) == [0, 0, 0]
    assert greedy_coloring(complete_graph(3)) == [0, 1, 2]
    assert greedy_coloring(PATH3) == [0, 1, 0]


def test_greedy_coloring_proper_and_bounded():
    for seed in range(6):
        g = random_graph(25, 0.4, seed)
        colors = greedy_coloring(g)
        assert all(colors[u - 1] != colors[v - 1] for u, v in g.edges())
        assert max(colors) + 1 <= max(degrees(g)) + 1
        assert sorted(set(colors)) == list(range(max(colors) + 1))


def test_parse_examples():
    assert parse_graph('{"n":3,"edges":[[1,2],[2,3]]}') == PATH3
    assert parse_graph('{"n":2,"edges":[]}') == empty_graph(2)
    with pytest.raises(RangeError):
        parse_graph('{"n":2,"edges":[[1,3]]}')


def test_parse_rejects_malformed():
    err = None
    try:
        parse_graph('{"n": 3,\n "edges": [[1, 2')
    except ParseError as e:
        err = e
    assert err is not None and err.line == 2
    for bad in ('{"n":3}', '{"n":3,"edges":[[2,1]]}',
                '{"n":3,"edges":[[1,2],[1,2]]}', '{"n":0,"edges":[]}',
                '{"n":3,"edges":[[1]]}', '[1,2]'):
        with pytest.raises(ParseError):
            parse_graph(bad)


def test_serialize_round_trip():
    for seed in range(5):
        g = random_graph(12, 0.5, seed)
        assert parse_graph(serialize_graph(g)) == g
    doc = json.loads(serialize_graph(PATH3))
    assert doc == {"n": 3, "edges": [[1, 2], [2, 3]]}
