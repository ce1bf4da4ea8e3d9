import random

import pytest

from oracles import brute_girth, chromatic_by_independent_set_cover, random_graph
from rgcages.atlas import figures
from rgcages.coloring import Coloring, chromatic_number, exists_equitable_k_coloring, verify_coloring
from rgcages.constructions import (ConstructionError, R33Case, equitable_triple, find_glue_edge, n_r33,
                                   odd_from_even_edge, odd_from_even_vertex, projective_incidence_graph, r33_cage,
                                   subdivide_and_glue)
from rgcages.graph import complete_bipartite, complete_graph, complete_multipartite, cycle_graph
from rgcages.invariants import bipartition, girth, is_connected, regularity

R33_ORDERS = [3, 6, 6, 10, 9, 12, 12, 16, 15, 18, 18]


@pytest.mark.parametrize("r,n", [(4, 6), (3, 6), (5, 10), (2, 3), (7, 12), (9, 16)])
def test_n_r33(r, n):
    assert n_r33(r) == n


def test_n_r33_rejects_small_r():
    with pytest.raises(ValueError):
        n_r33(1)
    with pytest.raises(ValueError):
        r33_cage(1)


def test_case_split():
    assert [R33Case.of(r).value for r in (2, 3, 5, 7)] == ["EvenR", "OddRHalfEven", "OddRHalfOdd", "OddRHalfEven"]


@pytest.mark.parametrize("r", range(2, 13))
def test_r33_cage(r):
    out = r33_cage(r)
    g = out.graph
    assert g.n == n_r33(r) == R33_ORDERS[r - 2]
    assert regularity(g) == r and girth(g).value == 3
    assert verify_coloring(g, out.coloring) and out.coloring.is_equitable
    assert chromatic_number(g)[0] == 3
    assert out.report.passed


def test_r33_small_cases():
    octa = r33_cage(4).graph
    assert octa == complete_multipartite([2, 2, 2])
    prism = r33_cage(3).graph
    assert prism.n == 6 and prism.m == 9 and girth(prism).value == 3


@pytest.mark.parametrize("r", [5, 9])
def test_triangle_survives(r):
    out = r33_cage(r)
    p = out.provenance
    x, y, z = p["x"], p["y"], p["z"]
    assert out.graph.has_edge(x, y) and out.graph.has_edge(y, z) and out.graph.has_edge(x, z)


def test_lower_bound_on_corpus():
    rng = random.Random(31)
    hits = 0
    for _ in range(1500):
        g = random_graph(rng, 11, 3)
        r = regularity(g)
        if r is None or r < 2:
            continue
        if chromatic_by_independent_set_cover(g) == 3:
            hits += 1
            assert g.n >= r + (r + 1) // 2
    assert hits > 5


@pytest.mark.parametrize("q,n,r", [(2, 14, 3), (3, 26, 4), (4, 42, 5), (5, 62, 6)])
def test_projective_incidence(q, n, r):
    g = projective_incidence_graph(q)
    assert g.n == n and regularity(g) == r and girth(g).value == 6 and bipartition(g).bipartite


def test_projective_q2_is_heawood(heawood):
    g = projective_incidence_graph(2)
    assert (g.n, regularity(g), girth(g).value) == (heawood.n, 3, 6)


def test_projective_rejects_non_prime_power():
    for q in (6, 10, 1, 0):
        with pytest.raises(ValueError):
            projective_incidence_graph(q)


def _check(out, n, r, g):
    assert out.graph.n == n and regularity(out.graph) == r and girth(out.graph).value == g
    assert verify_coloring(out.graph, out.coloring) and out.coloring.nonempty_classes() == 3
    if out.graph.n <= 60:
        assert chromatic_number(out.graph)[0] == 3
    assert out.report.passed


def test_vertex_deletion(pg3):
    out = odd_from_even_vertex(pg3)
    _check(out, 25, 4, 5)
    assert brute_girth(out.graph) == 5


def test_vertex_deletion_pg5():
    _check(odd_from_even_vertex(projective_incidence_graph(5)), 61, 6, 5)


def test_vertex_deletion_rejections(heawood):
    with pytest.raises(ConstructionError, match="girth"):
        odd_from_even_vertex(complete_bipartite(4, 4))
    with pytest.raises(ConstructionError):
        odd_from_even_vertex(heawood)  # odd degree
    with pytest.raises(ConstructionError):
        odd_from_even_vertex(complete_graph(5))


def test_edge_deletion(heawood):
    _check(odd_from_even_edge(heawood), 12, 3, 5)


def test_edge_deletion_pg4():
    _check(odd_from_even_edge(projective_incidence_graph(4)), 40, 5, 5)


def test_edge_deletion_rejections(petersen):
    with pytest.raises(ConstructionError, match="bipartite"):
        odd_from_even_edge(petersen)
    with pytest.raises(ConstructionError):
        odd_from_even_edge(complete_bipartite(3, 3))
    with pytest.raises(ConstructionError):
        odd_from_even_edge(projective_incidence_graph(3))  # even degree


def test_explicit_two_coloring(heawood):
    f = bipartition(heawood).sides
    a = odd_from_even_edge(heawood)
    b = odd_from_even_edge(heawood, f)
    assert a.graph == b.graph
    with pytest.raises(ConstructionError):
        odd_from_even_edge(heawood, [0] * heawood.n)


def test_glue_heawood(heawood):
    out = subdivide_and_glue(heawood)
    _check(out, 30, 3, 6)
    assert is_connected(out.graph)[0]


def test_glue_pg3(pg3):
    _check(subdivide_and_glue(pg3), 53, 4, 6)


def test_glue_cycle_edge_cases():
    # in C6 the only 6-cycle uses every edge, so no glue edge exists
    assert find_glue_edge(cycle_graph(6), 6) is None
    with pytest.raises(ConstructionError):
        subdivide_and_glue(cycle_graph(6))


def test_glue_rejects_non_bipartite(petersen):
    with pytest.raises(ConstructionError):
        subdivide_and_glue(petersen)


def test_triple_petersen(petersen):
    c = exists_equitable_k_coloring(petersen, 3).coloring
    assert sorted(c.census) == [3, 3, 4]
    out = equitable_triple(petersen, c)
    assert out.graph.n == 30 and out.coloring.census == (10, 10, 10)
    assert regularity(out.graph) == 3 and girth(out.graph).value == 5
    assert is_connected(out.graph) == (False, 3)
    assert out.claimed.equitable and out.report.passed


def test_triple_robertson(robertson):
    out = equitable_triple(robertson, figures.robertson_coloring())
    assert out.graph.n == 57 and out.coloring.census == (19, 19, 19)
    assert regularity(out.graph) == 4 and girth(out.graph).value == 5


def test_triple_k3():
    out = equitable_triple(complete_graph(3), Coloring((0, 1, 2), 3))
    assert out.graph.n == 9 and out.coloring.census == (3, 3, 3)


def test_triple_rejections(petersen):
    with pytest.raises(ConstructionError, match="proper"):
        equitable_triple(petersen, Coloring((0,) * 10, 3))
    with pytest.raises(ConstructionError, match="three"):
        equitable_triple(complete_bipartite(3, 3), Coloring((0, 0, 0, 1, 1, 1), 3))


def test_constructions_are_deterministic(pg3, heawood):
    assert odd_from_even_vertex(pg3).provenance == odd_from_even_vertex(pg3).provenance
    assert subdivide_and_glue(heawood).graph == subdivide_and_glue(heawood).graph
    assert r33_cage(7).provenance == r33_cage(7).provenance


@pytest.mark.parametrize("q,n,r", [(4, 170, 5), (5, 187, 6)])
def test_glue_with_extra_copies(q, n, r):
    out = subdivide_and_glue(projective_incidence_graph(q))
    g = out.graph
    assert g.n == n and regularity(g) == r and girth(g).value == 6
    assert verify_coloring(g, out.coloring) and out.report.passed
    assert out.report.measured["chi"] == 3
