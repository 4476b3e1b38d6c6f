"""Tests for the graph type, generators, and edge-list I/O."""

import math
import random

import pytest

from radiuskit.errors import InputError, InvalidParameterError, ParseError
from radiuskit.graphs import (Graph, attach_pendants, circulant, complete,
                              complete_bipartite, cycle, hamiltonian_path,
                              line_graph, line_graph_edge_count, parse_graph,
                              path, serialize_graph)


def test_generators():
    assert complete(4).num_edges == 6
    assert complete_bipartite(3, 4).num_edges == 12
    g = cycle(5)
    assert g.num_edges == 5
    assert all(g.degree(v) == 2 for v in g.vertices)
    assert path(3).edges == (("v1", "v2"), ("v2", "v3"))
    with pytest.raises(InvalidParameterError):
        cycle(2)
    with pytest.raises(InvalidParameterError):
        complete_bipartite(0, 3)


def test_graph_validation():
    with pytest.raises(InputError):
        Graph((), [("a", "a")])
    with pytest.raises(InputError):
        Graph((), [("a", "b"), ("b", "a")])
    with pytest.raises(InputError):
        Graph(("a b",), ())


def test_circulant():
    result = circulant(5, 2)
    assert result.graph.num_edges == 10  # every pair within distance 2: K_5
    assert all(result.graph.degree(v) == 4 for v in result.graph.vertices)
    assert not result.complete  # the k >= n/2 clamp did not fire
    result = circulant(8, 2)
    assert result.graph.num_edges == 16
    assert all(result.graph.degree(v) == 4 for v in result.graph.vertices)
    result = circulant(6, 1)
    g = result.graph
    assert g.num_edges == 6 and all(g.degree(v) == 2 for v in g.vertices)
    result = circulant(6, 3)
    assert result.complete and result.graph.num_edges == 15
    result = circulant(6, 7)
    assert result.complete and result.graph.num_edges == 15


def test_circulant_regularity_sweep():
    for n in range(5, 15):
        for k in range(1, (n - 1) // 2 + 1):
            g = circulant(n, k).graph
            assert g.num_edges == k * n
            assert all(g.degree(v) == 2 * k for v in g.vertices)


def test_line_graph():
    lg = line_graph(complete(3))
    assert (lg.num_vertices, lg.num_edges) == (3, 3)
    assert all(lg.degree(v) == 2 for v in lg.vertices)  # a triangle again
    lg = line_graph(path(4))
    assert (lg.num_vertices, lg.num_edges) == (3, 2)
    assert sorted(lg.degree(v) for v in lg.vertices) == [1, 1, 2]
    lg = line_graph(complete_bipartite(3, 3))
    assert (lg.num_vertices, lg.num_edges) == (9, 18)


def test_line_graph_handshake():
    rng = random.Random(5)
    for _ in range(25):
        n = rng.randint(2, 9)
        labels = [f"u{i}" for i in range(n)]
        edges = [(labels[i], labels[j]) for i in range(n)
                 for j in range(i + 1, n) if rng.random() < 0.5]
        if not edges:
            continue
        g = Graph(labels, edges)
        assert line_graph(g).num_edges == line_graph_edge_count(g)
        assert line_graph(g).num_edges == sum(
            math.comb(g.degree(v), 2) for v in g.vertices)


def test_attach_pendants():
    g = attach_pendants(complete(3), 1)
    assert (g.num_vertices, g.num_edges) == (6, 6)
    g0 = complete(3)
    assert attach_pendants(g0, 0) == g0
    g = attach_pendants(complete_bipartite(3, 3), 1)
    assert (g.num_vertices, g.num_edges) == (12, 15)


def test_attach_pendants_preserves_original():
    base = cycle(5)
    g = attach_pendants(base, 2)
    for u, v in base.edges:
        assert g.has_edge(u, v)
    for v in base.vertices:
        assert g.degree(v) == base.degree(v) + 2


def test_parse_and_serialize():
    g = parse_graph("a b\nb c")
    assert g.edges == (("a", "b"), ("b", "c"))
    text = serialize_graph(complete(4))
    assert parse_graph(text) == complete(4)
    assert serialize_graph(parse_graph(text)) == text
    # CRLF and comments are accepted
    g = parse_graph("a b\r\n# full comment\r\nb c # trailing\r\n")
    assert g.num_edges == 2


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_graph("a a")
    assert err.value.line == 1
    with pytest.raises(ParseError) as err:
        parse_graph("a b\na b c")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_graph("a b\nb a")
    assert err.value.line == 2
    with pytest.raises(InputError):
        serialize_graph(Graph(("lonely",), ()))


def test_hamiltonian_path():
    assert hamiltonian_path(path(4)) is not None
    star = Graph((), [("c", "l1"), ("c", "l2"), ("c", "l3")])
    assert hamiltonian_path(star) is None
    found = hamiltonian_path(complete_bipartite(2, 2))
    assert found is not None and len(found) == 4


def test_bipartition_and_connectivity():
    assert complete_bipartite(2, 3).bipartition() is not None
    assert complete(3).bipartition() is None
    assert cycle(6).bipartition() is not None
    assert cycle(5).bipartition() is None
    assert path(4).is_connected()
    assert not Graph((), [("a", "b"), ("c", "d")]).is_connected()
