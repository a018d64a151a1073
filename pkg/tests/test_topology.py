import numpy as np
import pytest

from ..topology import (
    Graph,
    TopologyError,
    all_to_all,
    describe,
    from_edges,
    is_strongly_connected,
    parse_edge_list,
    read_edge_list,
    random_strongly_connected,
    ring,
)


def test_all_to_all():
    graph = all_to_all(4)
    assert graph.n == 4
    assert graph.neighbors(2) == (1, 3, 4)
    assert graph.edge_count == 12
    assert is_strongly_connected(graph)


def test_single_oscillator_is_trivially_connected():
    graph = all_to_all(1)
    assert graph.edges == []
    assert is_strongly_connected(graph)


def test_ring_neighbors():
    graph = ring(6)
    assert graph.neighbors(1) == (2, 6)
    assert graph.neighbors(6) == (1, 5)
    assert graph.out_degree(3) == 2
    assert is_strongly_connected(graph)


def test_ring_of_two_has_one_edge_each_way():
    graph = ring(2)
    assert graph.edges == [(1, 2), (2, 1)]


def test_ring_rejects_single_oscillator():
    with pytest.raises(TopologyError):
        ring(1)


def test_from_edges_drops_duplicates():
    graph = from_edges(3, [(1, 2), (1, 2), (2, 3)])
    assert graph.edges == [(1, 2), (2, 3)]


@pytest.mark.parametrize("edges", [[(1, 1)], [(0, 2)], [(1, 4)], [(1, 2, 3)]])
def test_from_edges_rejects_invalid(edges):
    with pytest.raises(TopologyError):
        from_edges(3, edges)


def test_graph_validates_out_edges_length():
    with pytest.raises(TopologyError):
        Graph(n=2, out_edges=((2,),))


def test_chain_is_not_strongly_connected():
    assert not is_strongly_connected(from_edges(3, [(1, 2), (2, 3)]))
    assert is_strongly_connected(from_edges(3, [(1, 2), (2, 3), (3, 1)]))


def test_to_networkx_keeps_isolated_nodes():
    digraph = from_edges(3, [(1, 2)]).to_networkx()
    assert sorted(digraph.nodes) == [1, 2, 3]
    assert list(digraph.edges) == [(1, 2)]


def test_parse_edge_list_skips_comments():
    text = "# ring of three\n1 2\n\n2 3  # tail\n3 1\n"
    assert parse_edge_list(text) == [(1, 2), (2, 3), (3, 1)]


@pytest.mark.parametrize("text, line", [("1 2\n1\n", 2), ("1 x\n", 1)])
def test_parse_edge_list_reports_line(text, line):
    with pytest.raises(TopologyError, match=f"line {line}"):
        parse_edge_list(text)


def test_read_edge_list(tmp_path):
    path = tmp_path / "edges.txt"
    path.write_text("1 2\n2 1\n", encoding="utf-8")
    assert read_edge_list(path) == [(1, 2), (2, 1)]


def test_random_strongly_connected():
    rng = np.random.default_rng(5)
    for n in range(2, 9):
        assert is_strongly_connected(random_strongly_connected(n, rng))


def test_random_strongly_connected_is_seeded():
    first = random_strongly_connected(6, np.random.default_rng(8))
    second = random_strongly_connected(6, np.random.default_rng(8))
    assert first == second


def test_describe():
    assert describe(ring(4), "ring") == "ring (n=4, edges=8)"
    assert describe(all_to_all(2)) == "custom (n=2, edges=2)"


def _reaches_everything(graph):
    reach = np.eye(graph.n, dtype=bool)
    for source, target in graph.edges:
        reach[source - 1, target - 1] = True
    for k in range(graph.n):
        reach |= np.outer(reach[:, k], reach[k, :])
    return bool(reach.all())


def test_strong_connectivity_matches_transitive_closure():
    rng = np.random.default_rng(21)
    for _ in range(300):
        n = int(rng.integers(1, 7))
        pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        edges = [pair for pair in pairs if rng.random() < 0.35]
        graph = from_edges(n, edges)
        assert is_strongly_connected(graph) == _reaches_everything(graph)
