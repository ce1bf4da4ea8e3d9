"""Exact structural invariants of graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph


class _Acyclic:
    """Girth of a forest. Deliberately not comparable with integers."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "ACYCLIC"

    def __reduce__(self):
        return (_Acyclic, ())


ACYCLIC = _Acyclic()


@dataclass(frozen=True)
class GirthResult:
    value: int | _Acyclic
    witness: tuple[int, ...] = ()

    @property
    def acyclic(self) -> bool:
        return self.value is ACYCLIC


@dataclass(frozen=True)
class CageParams:
    r: int
    g: int
    chi: int
    equitable: bool = False

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"degree must be >= 2, got {self.r}")
        if self.g < 3:
            raise ValueError(f"girth must be >= 3, got {self.g}")
        if self.chi < 2:
            raise ValueError(f"chromatic number must be >= 2, got {self.chi}")
        if self.chi > self.r + 1:
            raise ValueError(f"Brooks: chi={self.chi} exceeds r+1={self.r + 1}")

    def as_dict(self) -> dict:
        return {"r": self.r, "g": self.g, "chi": self.chi, "equitable": self.equitable}


def regularity(g: Graph) -> Optional[int]:
    """Common degree if ``g`` is regular, else None. The empty graph has no degree."""
    degs = set(g.degrees())
    return degs.pop() if len(degs) == 1 else None


def _bfs_shortest_cycle(g: Graph, root: int, bound: int) -> tuple[int, tuple[int, ...]] | None:
    """Shortest closed walk through ``root`` formed by a non-tree edge, if shorter than ``bound``."""
    dist = {root: 0}
    parent = {root: -1}
    queue = deque([root])
    best = None
    while queue:
        u = queue.popleft()
        du = dist[u]
        if 2 * du + 1 >= bound:
            break
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = du + 1
                parent[w] = u
                queue.append(w)
            elif w != parent[u]:
                length = du + dist[w] + 1
                if length < bound:
                    bound = length
                    best = (u, w)
    if best is None:
        return None
    u, w = best
    left = [u]
    while left[-1] != root:
        left.append(parent[left[-1]])
    right = [w]
    while right[-1] != root:
        right.append(parent[right[-1]])
    cycle = tuple(reversed(left)) + tuple(right[:-1])
    return bound, cycle


def girth(g: Graph) -> GirthResult:
    """Length of a shortest cycle with one witness cycle, or ACYCLIC for forests."""
    best_len = g.n + 1
    best: tuple[int, ...] = ()
    for root in range(g.n):
        found = _bfs_shortest_cycle(g, root, best_len)
        if found is not None:
            best_len, best = found
            if best_len == 3:
                break
    if not best:
        return GirthResult(ACYCLIC)
    return GirthResult(best_len, best)


def shortest_cycle_through(g: Graph, x: int) -> int | None:
    """Length of a shortest cycle containing ``x`` (None if ``x`` lies on no cycle)."""
    best = None
    nbrs = g.adj[x]
    for i, a in enumerate(nbrs):
        d = distances_avoiding(g, a, {x})
        for b in nbrs[i + 1:]:
            if b in d and (best is None or d[b] + 2 < best):
                best = d[b] + 2
    return best


def distances_avoiding(g: Graph, src: int, blocked: set[int] | frozenset[int] = frozenset(),
                       skip_edge: tuple[int, int] | None = None) -> dict[int, int]:
    """BFS distances from ``src`` in ``g`` minus the ``blocked`` vertices (and optionally one edge)."""
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in dist or w in blocked:
                continue
            if skip_edge is not None and {u, w} == set(skip_edge):
                continue
            dist[w] = dist[u] + 1
            queue.append(w)
    return dist


@dataclass(frozen=True)
class Bipartition:
    sides: tuple[int, ...] | None  # per-vertex 0/1, None when not bipartite
    odd_cycle: tuple[int, ...] = ()

    @property
    def bipartite(self) -> bool:
        return self.sides is not None


def bipartition(g: Graph) -> Bipartition:
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] == -1:
                    side[w] = 1 - side[u]
                    parent[w] = u
                    queue.append(w)
                elif side[w] == side[u]:
                    return Bipartition(None, _odd_cycle(parent, u, w))
    return Bipartition(tuple(side))


def _odd_cycle(parent: list[int], u: int, w: int) -> tuple[int, ...]:
    def chain(v):
        out = [v]
        while parent[out[-1]] != -1:
            out.append(parent[out[-1]])
        return out

    pu, pw = chain(u), chain(w)
    on_w = set(pw)
    lca = next(v for v in pu if v in on_w)
    left = pu[: pu.index(lca) + 1]
    right = pw[: pw.index(lca)]
    return tuple(left) + tuple(reversed(right))


def moore_bound(r: int, g: int) -> int:
    """Moore lower bound on the order of an r-regular graph of girth g."""
    if r < 2 or g < 3:
        raise ValueError("need r >= 2 and g >= 3")
    if g % 2:
        return 1 + r * sum((r - 1) ** i for i in range((g - 3) // 2 + 1))
    return 2 * sum((r - 1) ** i for i in range((g - 2) // 2 + 1))


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [s], deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> tuple[bool, int]:
    """(connected?, number of components); the null graph counts as connected."""
    k = len(components(g))
    return k <= 1, k


def is_cycle(g: Graph, seq) -> bool:
    seq = list(seq)
    if len(seq) < 3 or len(set(seq)) != len(seq):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
