"""Constructions of (r, g, 3)-graphs together with their defining colorings.

Every builder re-verifies its output (regularity, girth, chromatic number,
properness of the coloring) and raises ``ConstructionError`` instead of
returning a graph that misses its claim.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import ceil
from typing import Any, Sequence

from .coloring import Coloring, transport_coloring, union_coloring, verify_coloring
from .factor import hamiltonian_cycle_bipartite, one_factor_from_cycle, perfect_matching_avoiding
from .gf import field_tables, prime_power
from .graph import (
    Graph,
    add_edges,
    complete_multipartite,
    delete_vertices,
    disjoint_union,
    from_edge_list,
    identify_vertices,
    induced_subgraph,
    norm_edge,
    remove_edges,
    subdivide_edge,
)
from .invariants import CageParams, bipartition, distances_avoiding, girth, regularity
from .report import VerificationReport, verify_graph


class ConstructionError(RuntimeError):
    pass


@dataclass
class ConstructionOutput:
    graph: Graph
    coloring: Coloring
    claimed: CageParams
    provenance: dict[str, Any] = field(default_factory=dict)
    report: VerificationReport | None = None


def _certify(name: str, out: ConstructionOutput, order: int | None = None) -> ConstructionOutput:
    rep = verify_graph(out.graph, out.claimed, out.coloring, claim=name, order=order)
    out.report = rep
    if not rep.passed:
        raise ConstructionError(f"{name} failed its postconditions: {rep.text()}")
    return out


# -- (r,3,3) cages -------------------------------------------------------------

class R33Case(enum.Enum):
    EVEN_R = "EvenR"
    ODD_R_HALF_EVEN = "OddRHalfEven"
    ODD_R_HALF_ODD = "OddRHalfOdd"

    @classmethod
    def of(cls, r: int) -> "R33Case":
        if r % 2 == 0:
            return cls.EVEN_R
        return cls.ODD_R_HALF_EVEN if ceil(r / 2) % 2 == 0 else cls.ODD_R_HALF_ODD


def n_r33(r: int) -> int:
    """Minimum order of an r-regular graph with girth 3 and chromatic number 3."""
    if r < 2:
        raise ValueError("r must be >= 2")
    half = (r + 1) // 2
    case = R33Case.of(r)
    if case is R33Case.EVEN_R:
        return r + r // 2
    if case is R33Case.ODD_R_HALF_EVEN:
        return r + half + 1
    return r + half + 2


def _part_coloring(parts: Sequence[int]) -> Coloring:
    return Coloring(tuple(i for i, p in enumerate(parts) for _ in range(p)), len(parts))


def r33_cage(r: int) -> ConstructionOutput:
    if r < 2:
        raise ValueError("r must be >= 2")
    case = R33Case.of(r)
    prov: dict[str, Any] = {"construction": "r33", "r": r, "case": case.value}
    if case is R33Case.EVEN_R:
        parts = [r // 2] * 3
        g = complete_multipartite(parts)
    elif case is R33Case.ODD_R_HALF_EVEN:
        parts = [(r + 1) // 2] * 3
        k = complete_multipartite(parts)
        m = perfect_matching_avoiding(k)
        if m is None:
            raise ConstructionError("no 1-factor in the complete tripartite graph")
        g = remove_edges(k, m.edges)
        prov["removed_factor"] = [list(e) for e in m.sorted_edges()]
    else:
        a, b = (r + 3) // 2, (r + 1) // 2
        parts = [a, b, b]
        k = complete_multipartite(parts)
        x, y, z = 0, a, a + b
        triangle = [(x, y), (y, z), (x, z)]
        m = perfect_matching_avoiding(k, triangle)
        if m is None:
            raise ConstructionError("no 1-factor avoiding the triangle xyz")
        h = remove_edges(k, m.edges)
        f, fmap = induced_subgraph(h, range(a, a + 2 * b))
        back = {new: old for old, new in fmap.items()}
        cycle = hamiltonian_cycle_bipartite(f)
        if cycle is None:
            raise ConstructionError("B u C subgraph is not Hamiltonian")
        factor = one_factor_from_cycle(cycle, (fmap[y], fmap[z]))
        factor_edges = [norm_edge(back[u], back[v]) for u, v in factor.sorted_edges()]
        g = remove_edges(h, factor_edges)
        if not all(g.has_edge(u, v) for u, v in triangle):
            raise ConstructionError("triangle xyz did not survive")
        prov.update({
            "x": x, "y": y, "z": z,
            "removed_factor": [list(e) for e in m.sorted_edges()],
            "hamiltonian_cycle": [back[v] for v in cycle.vertices],
            "removed_cycle_factor": [list(e) for e in sorted(factor_edges)],
        })
    prov["parts"] = parts
    out = ConstructionOutput(g, _part_coloring(parts), CageParams(r, 3, 3, equitable=True), prov)
    return _certify(f"r33(r={r})", out, order=n_r33(r))


# -- odd girth from even girth -----------------------------------------------

def _two_coloring(g: Graph, f: Coloring | Sequence[int] | None) -> list[int]:
    if f is None:
        bip = bipartition(g)
        if not bip.bipartite:
            raise ConstructionError("input graph is not bipartite")
        return list(bip.sides)
    sides = list(f.assignment) if isinstance(f, Coloring) else [int(s) for s in f]
    if len(sides) != g.n or any(s not in (0, 1) for s in sides):
        raise ConstructionError("2-coloring must assign 0/1 to every vertex")
    if not verify_coloring(g, Coloring(tuple(sides), 2)):
        raise ConstructionError("2-coloring is not proper (input not bipartite?)")
    return sides


def _check_even_input(g: Graph, min_girth: int) -> tuple[int, int]:
    r = regularity(g)
    if r is None:
        raise ConstructionError("input graph is not regular")
    gr = girth(g)
    if gr.acyclic:
        raise ConstructionError("input graph is acyclic")
    h = gr.value
    if h % 2 or h < min_girth:
        raise ConstructionError(f"input girth {h} must be even and >= {min_girth}")
    return r, h


def _pair_on_short_cycle(g: Graph, x: int, h: int, blocked: set[int]) -> tuple[int, int] | None:
    """Lowest pair of neighbors of ``x`` joined by a path of length h-2 avoiding ``blocked``."""
    nbrs = [w for w in g.adj[x] if w not in blocked]
    for i, a in enumerate(nbrs):
        d = distances_avoiding(g, a, blocked)
        for b in nbrs[i + 1:]:
            if d.get(b) == h - 2:
                return a, b
    return None


def odd_from_even_vertex(g: Graph, f: Coloring | Sequence[int] | None = None) -> ConstructionOutput:
    """Delete a vertex x of an r-regular bipartite girth-(h) graph (r even) and pair up its neighbors."""
    sides = _two_coloring(g, f)
    r, h = _check_even_input(g, 6)
    if r % 2 or r < 4:
        raise ConstructionError(f"vertex-deletion construction needs even r >= 4, got {r}")
    for x in range(g.n):
        pair = _pair_on_short_cycle(g, x, h, {x})
        if pair is not None:
            break
    else:
        raise ConstructionError(f"no vertex lies on a {h}-cycle")
    x1, x2 = pair
    order = [x1, x2] + [w for w in g.adj[x] if w not in pair]
    hg, mapping = delete_vertices(g, {x})
    new_edges = [(mapping[order[i]], mapping[order[i + 1]]) for i in range(0, r, 2)]
    hg = add_edges(hg, new_edges)
    colors = [sides[v] for v in sorted(mapping)]
    for j in range(1, r, 2):
        colors[mapping[order[j]]] = 2
    prov = {"construction": "odd-from-even-vertex", "deleted": x, "neighbor_order": order,
            "added_edges_original_ids": [[order[i], order[i + 1]] for i in range(0, r, 2)],
            "mapping": {str(k): v for k, v in mapping.items()}}
    out = ConstructionOutput(hg, Coloring(tuple(colors), 3), CageParams(r, h - 1, 3), prov)
    return _certify("odd-from-even-vertex", out, order=g.n - 1)


def odd_from_even_edge(g: Graph, f: Coloring | Sequence[int] | None = None) -> ConstructionOutput:
    """Delete an edge's endpoints x, y (r odd) and pair up the remaining neighbors of each."""
    sides = _two_coloring(g, f)
    r, h = _check_even_input(g, 6)
    if r % 2 == 0 or r < 3:
        raise ConstructionError(f"edge-deletion construction needs odd r >= 3, got {r}")
    choice = None
    for x in range(g.n):
        for y in g.adj[x]:
            pair = _pair_on_short_cycle(g, x, h, {x, y})
            if pair is not None:
                choice = x, y, pair
                break
        if choice:
            break
    if choice is None:
        raise ConstructionError(f"no edge xy with x on a {h}-cycle avoiding y")
    x, y, (x1, x2) = choice
    xs = [x1, x2] + [w for w in g.adj[x] if w not in (x1, x2, y)]
    ys = [w for w in g.adj[y] if w != x]
    hg, mapping = delete_vertices(g, {x, y})
    pairs = [(s[i], s[i + 1]) for s in (xs, ys) for i in range(0, r - 1, 2)]
    hg = add_edges(hg, [(mapping[a], mapping[b]) for a, b in pairs])
    colors = [sides[v] for v in sorted(mapping)]
    for s in (xs, ys):
        for j in range(1, r - 1, 2):
            colors[mapping[s[j]]] = 2
    prov = {"construction": "odd-from-even-edge", "deleted_edge": [x, y], "x_neighbors": xs,
            "y_neighbors": ys, "added_edges_original_ids": [list(p) for p in pairs],
            "mapping": {str(k): v for k, v in mapping.items()}}
    out = ConstructionOutput(hg, Coloring(tuple(colors), 3), CageParams(r, h - 1, 3), prov)
    return _certify("odd-from-even-edge", out, order=g.n - 2)


# -- subdivision and gluing (even girth, chi = 3) ----------------------------------

def find_glue_edge(g: Graph, h: int) -> tuple[int, int] | None:
    """First edge (id order) on an h-cycle such that some h-cycle avoids it."""
    for x, y in g.edges:
        d = distances_avoiding(g, x, skip_edge=(x, y))
        if d.get(y) != h - 1:
            continue
        rest = remove_edges(g, [(x, y)])
        gr = girth(rest)
        if not gr.acyclic and gr.value == h:
            return x, y
    return None


def subdivide_and_glue(g: Graph, f: Coloring | Sequence[int] | None = None) -> ConstructionOutput:
    sides = _two_coloring(g, f)
    r, h = _check_even_input(g, 4)
    edge = find_glue_edge(g, h)
    if edge is None:
        raise ConstructionError(f"every edge on a {h}-cycle meets all {h}-cycles")
    hg, z = subdivide_edge(g, edge)
    fh = Coloring(tuple(sides) + (2,), 3)
    prov: dict[str, Any] = {"construction": "subdivide-and-glue", "subdivided_edge": list(edge), "z": z}
    if r % 2 == 0:
        copies = r // 2
        u, offsets = disjoint_union([hg] * copies)
        glued, mapping = identify_vertices(u, {off + z for off in offsets})
        coloring = transport_coloring(union_coloring([fh] * copies), mapping, glued.n)
        prov.update(copies=copies, glued_vertex=mapping[z])
    else:
        fh_swapped = fh.permuted([2, 1, 0])
        extra = (r - 3) // 2
        pieces = [hg] * (1 + extra) + [hg] * (1 + extra)
        u, offsets = disjoint_union(pieces)
        ucol = union_coloring([fh] * (1 + extra) + [fh_swapped] * (1 + extra))
        zs = {off + z for off in offsets[: 1 + extra]}
        zps = {off + z for off in offsets[1 + extra:]}
        step, m1 = identify_vertices(u, zs)
        glued, m2 = identify_vertices(step, {m1[v] for v in zps})
        mapping = {old: m2[mid] for old, mid in m1.items()}
        coloring = transport_coloring(ucol, mapping, glued.n)
        zz = (mapping[offsets[0] + z], mapping[offsets[1 + extra] + z])
        glued = add_edges(glued, [zz])
        prov.update(copies_each_side=1 + extra, joined_edge=list(zz))
    out = ConstructionOutput(glued, coloring, CageParams(r, h, 3), prov)
    return _certify("subdivide-and-glue", out)


# -- equitable triples ---------------------------------------------------------

def equitable_triple(g: Graph, c: Coloring) -> ConstructionOutput:
    """Three disjoint copies; copy j shifts its class labels by j, so all classes have |V(g)| vertices."""
    if c.n != g.n or not verify_coloring(g, c):
        raise ConstructionError("coloring is not a proper coloring of the graph")
    if c.k != 3 or c.nonempty_classes() != 3:
        raise ConstructionError("need a coloring with exactly three nonempty classes")
    r = regularity(g)
    gr = girth(g)
    if r is None or gr.acyclic:
        raise ConstructionError("input must be regular and contain a cycle")
    u, offsets = disjoint_union([g] * 3)
    colors = [(c.assignment[v] - j) % 3 for j in range(3) for v in range(g.n)]
    prov = {"construction": "equitable-triple", "offsets": offsets, "input_census": list(c.census)}
    out = ConstructionOutput(u, Coloring(tuple(colors), 3), CageParams(r, gr.value, 3, equitable=True), prov)
    return _certify("equitable-triple", out, order=3 * g.n)


# -- projective planes -------------------------------------------------------------

def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalized representatives (first nonzero coordinate 1) of PG(2, q)."""
    pts = [(1, a, b) for a in range(q) for b in range(q)]
    pts += [(0, 1, a) for a in range(q)]
    pts.append((0, 0, 1))
    return pts


def projective_incidence_graph(q: int) -> Graph:
    """Point/line incidence graph of PG(2, q): points get ids 0..N-1, lines N..2N-1.

    ``q`` must be a prime power; for primes the arithmetic is plain mod-q.
    """
    if prime_power(q) is None:
        raise ValueError(f"q={q} is not a prime power")
    add, mul = field_tables(q)
    pts = projective_points(q)
    n = len(pts)

    def dot(p, ln):
        return add[add[mul[p[0]][ln[0]]][mul[p[1]][ln[1]]]][mul[p[2]][ln[2]]]

    edges = [(i, n + j) for i, p in enumerate(pts) for j, ln in enumerate(pts) if dot(p, ln) == 0]
    return from_edge_list(2 * n, edges)
