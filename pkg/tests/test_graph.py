import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rgcages.formats import (coloring_from_json, coloring_to_json, from_graph6, graph_from_json, graph_to_json,
                             parse_graph, to_dot, to_graph6)
from rgcages.graph import (GraphError, add_edges, complete_graph, complete_multipartite, cycle_graph,
                           delete_vertices, disjoint_union, empty_graph, from_edge_list, identify_vertices,
                           path_graph, remove_edges, subdivide_edge)
from rgcages.coloring import Coloring
from rgcages.invariants import girth, is_connected, regularity


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(n, chosen)


def check_invariants(g):
    for v in range(g.n):
        assert v not in g.adj[v]
        for u in g.adj[v]:
            assert 0 <= u < g.n and v in g.adj[u]


def test_from_edge_list_examples(robertson):
    k3 = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert k3 == complete_graph(3)
    assert from_edge_list(2, []).m == 0
    assert robertson.n == 19 and regularity(robertson) == 4
    assert from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_from_edge_list_errors(edges):
    with pytest.raises(GraphError):
        from_edge_list(3, edges)


def test_complete_multipartite():
    octa = complete_multipartite([2, 2, 2])
    assert (octa.n, octa.m, regularity(octa)) == (6, 12, 4)
    assert complete_multipartite([1, 1, 1]) == complete_graph(3)
    g = complete_multipartite([4, 3, 3])
    assert g.n == 10
    assert g.degrees() == [6] * 4 + [7] * 6
    with pytest.raises(GraphError):
        complete_multipartite([3])


def test_remove_edges():
    assert remove_edges(complete_graph(3), [(0, 1)]) == from_edge_list(3, [(0, 2), (1, 2)])
    octa = complete_multipartite([2, 2, 2])
    cubic = remove_edges(octa, [(0, 2), (1, 4), (3, 5)])
    assert regularity(cubic) == 3 and cubic.n == 6
    assert remove_edges(complete_graph(4), complete_graph(4).edges) == empty_graph(4)
    with pytest.raises(GraphError):
        remove_edges(path_graph(3), [(0, 2)])


def test_delete_vertices(heawood):
    g, mapping = delete_vertices(complete_graph(4), {3})
    assert g == complete_graph(3) and mapping == {0: 0, 1: 1, 2: 2}
    x, y = heawood.edges[0]
    h, _ = delete_vertices(heawood, {x, y})
    # x and y each lose their other two neighbors' edge: four vertices drop to degree 2
    assert h.n == 12 and sorted(h.degrees()) == [2] * 4 + [3] * 8
    g, mapping = delete_vertices(complete_graph(3), {0, 1, 2})
    assert g.n == 0 and mapping == {}


def test_add_edges():
    assert add_edges(path_graph(3), [(0, 2)]) == complete_graph(3)
    assert add_edges(empty_graph(4), [(0, 1), (2, 3)]).degrees() == [1, 1, 1, 1]
    with pytest.raises(GraphError, match="duplicate"):
        add_edges(path_graph(2), [(0, 1)])
    with pytest.raises(GraphError):
        add_edges(path_graph(2), [(1, 1)])


def test_subdivide_edge(heawood):
    g, z = subdivide_edge(complete_graph(3), (0, 1))
    assert z == 3 and g == from_edge_list(4, [(0, 2), (1, 2), (0, 3), (1, 3)])
    assert regularity(g) == 2 and girth(g).value == 4
    h, z = subdivide_edge(heawood, heawood.edges[0])
    assert h.n == 15 and h.degree(z) == 2
    # a 6-cycle avoiding the subdivided edge survives, so the girth stays 6
    assert girth(h).value == 6
    p, z = subdivide_edge(path_graph(2), (0, 1))
    assert p == from_edge_list(3, [(0, 2), (1, 2)])
    with pytest.raises(GraphError):
        subdivide_edge(path_graph(3), (0, 2))


def test_disjoint_union(petersen):
    g, offs = disjoint_union([complete_graph(3)] * 2)
    assert (g.n, g.m, offs) == (6, 6, [0, 3])
    assert is_connected(g) == (False, 2)
    g, offs = disjoint_union([petersen] * 3)
    assert (g.n, g.m, offs) == (30, 45, [0, 10, 20])
    g, offs = disjoint_union([])
    assert g.n == 0 and offs == []


def test_identify_vertices(heawood):
    two_paths = from_edge_list(4, [(0, 1), (2, 3)])
    g, mapping = identify_vertices(two_paths, {1, 3})
    assert g == from_edge_list(3, [(0, 1), (1, 2)])
    assert mapping[3] == mapping[1] == 1
    h, z = subdivide_edge(heawood, heawood.edges[0])
    u, offs = disjoint_union([h, h])
    glued, mapping = identify_vertices(u, {offs[0] + z, offs[1] + z})
    assert glued.n == 29 and glued.degree(mapping[z]) == 4
    with pytest.raises(GraphError):
        identify_vertices(complete_graph(3), {0, 1})
    with pytest.raises(GraphError, match="overlap"):
        identify_vertices(path_graph(3), {0, 2})


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_surgery_preserves_invariants(g, data):
    check_invariants(g)
    if g.m:
        e = data.draw(st.sampled_from(g.edges))
        s, z = subdivide_edge(g, e)
        check_invariants(s)
        assert (s.n, s.m, s.degree(z)) == (g.n + 1, g.m + 1, 2)
        check_invariants(remove_edges(g, [e]))
    if g.n:
        vs = data.draw(st.sets(st.integers(0, g.n - 1)))
        d, mapping = delete_vertices(g, vs)
        check_invariants(d)
        assert d.n == g.n - len(vs)
        for u, v in d.edges:
            inv = {new: old for old, new in mapping.items()}
            assert g.has_edge(inv[u], inv[v])
    u, offs = disjoint_union([g, g])
    assert (u.n, u.m) == (2 * g.n, 2 * g.m)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=30))
def test_graph6_roundtrip_and_matches_networkx(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    ref = nx.Graph()
    ref.add_nodes_from(range(g.n))
    ref.add_edges_from(g.edges)
    assert nx.to_graph6_bytes(ref, header=False).strip().decode() == s


def test_graph6_large_header():
    g = cycle_graph(100)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    ref = nx.cycle_graph(100)
    assert nx.to_graph6_bytes(ref, header=False).strip().decode() == s
    assert from_graph6(">>graph6<<" + s + "\n") == g


def test_json_and_detection(petersen):
    obj = graph_to_json(petersen)
    assert obj["n"] == 10 and len(obj["edges"]) == 15
    assert graph_from_json(json.loads(json.dumps(obj))) == petersen
    assert parse_graph(json.dumps(obj)) == petersen
    assert parse_graph(to_graph6(petersen) + "\n") == petersen
    c = Coloring((0, 1, 0), 2)
    assert coloring_to_json(c) == {"k": 2, "classes": [[0, 2], [1]]}
    assert coloring_from_json(coloring_to_json(c)) == c


def test_dot_export():
    dot = to_dot(path_graph(2), Coloring((0, 1), 2))
    assert dot.startswith("graph G {") and "0 -- 1;" in dot and 'fillcolor="red"' in dot
    assert "fillcolor" not in to_dot(path_graph(2))
