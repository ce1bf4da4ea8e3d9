"""Perfect matchings avoiding forbidden edges and Hamiltonian cycles of balanced bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Edge, Graph, norm_edge
from .invariants import bipartition


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]
    n: int

    def __post_init__(self):
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen:
                raise ValueError("matching edges share a vertex")
            seen.update((u, v))

    @property
    def perfect(self) -> bool:
        return 2 * len(self.edges) == self.n

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class HamCycle:
    vertices: tuple[int, ...]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __len__(self) -> int:
        return len(self.vertices)


def perfect_matching_avoiding(g: Graph, forbidden: Iterable[Sequence[int]] = ()) -> Matching | None:
    """First perfect matching in lowest-vertex-first order that uses no forbidden edge."""
    n = g.n
    if n % 2:
        return None
    banned = {norm_edge(int(e[0]), int(e[1])) for e in forbidden}
    allowed = [[w for w in g.adj[v] if norm_edge(v, w) not in banned] for v in range(n)]
    mate = [-1] * n

    def dead_end() -> bool:
        for v in range(n):
            if mate[v] == -1 and not any(mate[w] == -1 for w in allowed[v]):
                return True
        return False

    def solve(start: int) -> bool:
        u = start
        while u < n and mate[u] != -1:
            u += 1
        if u == n:
            return True
        for w in allowed[u]:
            if mate[w] != -1:
                continue
            mate[u], mate[w] = w, u
            if not dead_end() and solve(u + 1):
                return True
            mate[u] = mate[w] = -1
        return False

    if n and dead_end():
        return None
    if not solve(0):
        return None
    return Matching(frozenset((v, mate[v]) for v in range(n) if v < mate[v]), n)


def hamiltonian_cycle_bipartite(g: Graph) -> HamCycle | None:
    """Exact backtracking search for a Hamiltonian cycle in a balanced bipartite graph."""
    n = g.n
    bip = bipartition(g)
    if not bip.bipartite or n < 4 or 2 * sum(bip.sides) != n:
        return None
    adj = g.adj
    on_path = [False] * n
    path = [0]
    on_path[0] = True

    def hopeless(end: int) -> bool:
        # each unvisited vertex needs two usable neighbors: unvisited ones, the tail or the start
        for v in range(n):
            if on_path[v]:
                continue
            usable = 0
            for w in adj[v]:
                if not on_path[w] or w == end or w == 0:
                    usable += 1
                    if usable == 2:
                        break
            if usable < 2:
                return True
        return False

    def extend() -> bool:
        end = path[-1]
        if len(path) == n:
            return g.has_edge(end, 0)
        for w in adj[end]:
            if on_path[w]:
                continue
            on_path[w] = True
            path.append(w)
            if not hopeless(w) and extend():
                return True
            path.pop()
            on_path[w] = False
        return False

    if hopeless(0) or not extend():
        return None
    return HamCycle(tuple(path))


def alternating_factors(c: HamCycle) -> tuple[Matching, Matching]:
    """The two perfect matchings of an even cycle: edges at even and at odd positions."""
    if len(c) % 2:
        raise ValueError("odd cycle has no alternating 1-factors")
    es = c.edges()
    n = len(c)
    return Matching(frozenset(es[0::2]), n), Matching(frozenset(es[1::2]), n)


def one_factor_from_cycle(c: HamCycle, avoid: Sequence[int]) -> Matching:
    """The alternating 1-factor of an even cycle that does not contain ``avoid``."""
    even, odd = alternating_factors(c)
    return odd if norm_edge(int(avoid[0]), int(avoid[1])) in even.edges else even
