"""Exact proper colorings: k-colorability, chromatic number, equitable colorings."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Graph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Total vertex -> class assignment with ``k`` classes (some may be empty)."""

    assignment: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(int(c) for c in self.assignment))
        if any(not 0 <= c < self.k for c in self.assignment):
            raise ColoringError(f"class index outside [0, {self.k})")

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[Iterable[int]], k: int | None = None) -> "Coloring":
        assignment = [-1] * n
        for i, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n:
                    raise ColoringError(f"vertex {v} out of range")
                if assignment[v] != -1:
                    raise ColoringError(f"vertex {v} in two classes")
                assignment[v] = i
        if -1 in assignment:
            raise ColoringError(f"vertex {assignment.index(-1)} uncolored")
        return cls(tuple(assignment), len(classes) if k is None else k)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def census(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for c in self.assignment:
            sizes[c] += 1
        return tuple(sizes)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return out

    @property
    def spread(self) -> int:
        sizes = self.census
        return max(sizes) - min(sizes) if sizes else 0

    @property
    def is_equitable(self) -> bool:
        return self.spread <= 1

    def nonempty_classes(self) -> int:
        return sum(1 for s in self.census if s)

    def permuted(self, perm: Sequence[int]) -> "Coloring":
        """Rename class ``c`` to ``perm[c]``."""
        return Coloring(tuple(perm[c] for c in self.assignment), self.k)


def verify_coloring(g: Graph, c: Coloring) -> bool:
    if c.n != g.n:
        raise ColoringError(f"coloring has {c.n} entries for a graph of order {g.n}")
    a = c.assignment
    return all(a[u] != a[v] for u, v in g.edges)


def balanced_sizes(n: int, k: int) -> tuple[int, ...]:
    """Class sizes of an equitable k-partition of n items, largest first."""
    q, rem = divmod(n, k)
    return (q + 1,) * rem + (q,) * (k - rem)


# -- plain k-colorability ------------------------------------------------------

@dataclass
class SearchStats:
    nodes: int = 0
    complete: bool = True


class _NodeLimit(Exception):
    pass


def _dsatur_search(g: Graph, k: int, node_limit: int | None, stats: SearchStats) -> list[int] | None:
    n = g.n
    if n == 0:
        return []
    if k < 1:
        return None
    adj = g.adj
    deg = g.degrees()
    color = [-1] * n
    cnt = [[0] * k for _ in range(n)]
    sat = [0] * n
    uncolored = set(range(n))

    def pick() -> int:
        # highest saturation, then highest degree, then lowest id
        return max(uncolored, key=lambda v: (sat[v], deg[v], -v))

    def assign(v: int, c: int) -> bool:
        color[v] = c
        uncolored.discard(v)
        ok = True
        for w in adj[v]:
            cw = cnt[w]
            cw[c] += 1
            if cw[c] == 1:
                sat[w] += 1
                if color[w] == -1 and sat[w] >= k:
                    ok = False
        return ok

    def unassign(v: int, c: int) -> None:
        color[v] = -1
        uncolored.add(v)
        for w in adj[v]:
            cw = cnt[w]
            cw[c] -= 1
            if cw[c] == 0:
                sat[w] -= 1

    def solve(used: int) -> bool:
        stats.nodes += 1
        if node_limit is not None and stats.nodes > node_limit:
            raise _NodeLimit
        if not uncolored:
            return True
        v = pick()
        cv = cnt[v]
        choices = [c for c in range(used) if cv[c] == 0]
        if used < k:
            # a fresh class may be opened only in index order
            choices.append(used)
        for c in choices:
            ok = assign(v, c)
            if ok and solve(max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    try:
        found = solve(0)
    except _NodeLimit:
        stats.complete = False
        return None
    return color if found else None


def exists_k_coloring(g: Graph, k: int, node_limit: int | None = None,
                      stats: SearchStats | None = None) -> Coloring | None:
    """A proper k-coloring of ``g`` if one exists (exhaustive DSATUR backtracking)."""
    if k < 1:
        raise ColoringError("k must be >= 1")
    stats = stats if stats is not None else SearchStats()
    found = _dsatur_search(g, k, node_limit, stats)
    return None if found is None else Coloring(tuple(found), k)


def greedy_clique(g: Graph) -> list[int]:
    """Largest clique among greedy extensions from every start vertex."""
    best: list[int] = []
    deg = g.degrees()
    for s in range(g.n):
        clique = [s]
        cand = set(g.adj[s])
        while cand:
            v = max(cand, key=lambda u: (deg[u], -u))
            clique.append(v)
            cand &= g.neighbors(v)
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def greedy_dsatur(g: Graph) -> Coloring:
    """Heuristic DSATUR coloring (no backtracking), used as an upper bound."""
    n = g.n
    color = [-1] * n
    deg = g.degrees()
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if color[u] == -1), key=lambda u: (len(seen[u]), deg[u], -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for w in g.adj[v]:
            seen[w].add(c)
    return Coloring(tuple(color), max(color, default=-1) + 1)


def chromatic_number(g: Graph, node_limit: int | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with a certificate coloring."""
    if g.n == 0:
        return 0, Coloring((), 0)
    upper = greedy_dsatur(g)
    lower = max(1, len(greedy_clique(g)))
    for k in range(lower, upper.k):
        stats = SearchStats()
        found = exists_k_coloring(g, k, node_limit=node_limit, stats=stats)
        if not stats.complete:
            raise TimeoutError(f"node limit reached while testing k={k}")
        if found is not None:
            return k, found
    return upper.k, upper


# -- equitable colorings ---------------------------------------------------

@dataclass(frozen=True)
class EquitableWitness:
    """Either a coloring with the requested class sizes, or proof none exists."""

    sizes: tuple[int, ...]
    coloring: Coloring | None = None
    exhausted: bool = False
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.coloring is not None

    @property
    def inconclusive(self) -> bool:
        return self.coloring is None and not self.exhausted

    def as_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "found": self.found,
            "exhausted": self.exhausted,
            "nodes": self.nodes,
            "census": list(self.coloring.census) if self.coloring else None,
        }


def exists_coloring_with_sizes(g: Graph, sizes: Sequence[int],
                                node_limit: int | None = None) -> EquitableWitness:
    """Search for a proper coloring whose class ``i`` has exactly ``sizes[i]`` vertices.

    Vertices are assigned in id order. Classes of equal capacity are
    interchangeable, so such a class may only receive its first vertex after
    every lower-indexed class of the same capacity is nonempty; this forces
    their minimum vertex ids to increase.
    """
    sizes = tuple(int(s) for s in sizes)
    n, k = g.n, len(sizes)
    if sum(sizes) != n or any(s < 0 for s in sizes):
        return EquitableWitness(sizes, None, True, 0)
    masks = g.masks
    full = (1 << n) - 1
    twin_prev = [c - 1 if c > 0 and sizes[c - 1] == sizes[c] else -1 for c in range(k)]
    members = [0] * k  # vertices in class
    blocked = [0] * k  # union of neighborhoods of class members
    count = [0] * k
    assignment = [-1] * n
    nodes = 0

    def feasible(free: int) -> bool:
        # every class must still be able to reach its size
        for c in range(k):
            need = sizes[c] - count[c]
            if need and (free & ~blocked[c]).bit_count() < need:
                return False
        # every unassigned vertex must keep some open class
        open_blocks = [blocked[c] for c in range(k) if count[c] < sizes[c]]
        if not open_blocks:
            return free == 0
        stuck = free
        for b in open_blocks:
            stuck &= b
            if not stuck:
                return True
        return False

    def solve(v: int) -> bool:
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _NodeLimit
        if v == n:
            return True
        bit = 1 << v
        free_after = full & ~((bit << 1) - 1)
        for c in range(k):
            if count[c] >= sizes[c] or blocked[c] & bit:
                continue
            if count[c] == 0 and twin_prev[c] >= 0 and count[twin_prev[c]] == 0:
                continue
            members[c] |= bit
            old_block = blocked[c]
            blocked[c] |= masks[v]
            count[c] += 1
            assignment[v] = c
            if feasible(free_after) and solve(v + 1):
                return True
            members[c] &= ~bit
            blocked[c] = old_block
            count[c] -= 1
            assignment[v] = -1
        return False

    try:
        ok = solve(0)
    except _NodeLimit:
        return EquitableWitness(sizes, None, False, nodes)
    if ok:
        return EquitableWitness(sizes, Coloring(tuple(assignment), k), False, nodes)
    return EquitableWitness(sizes, None, True, nodes)


def exists_equitable_k_coloring(g: Graph, k: int, node_limit: int | None = None) -> EquitableWitness:
    """Equitable k-coloring (class sizes differ by at most one) or an exhaustion certificate."""
    if k < 1:
        raise ColoringError("k must be >= 1")
    return exists_coloring_with_sizes(g, balanced_sizes(g.n, k), node_limit)


def transport_coloring(c: Coloring, mapping: Mapping[int, int], n_new: int) -> Coloring:
    """Carry a coloring across a relabelling (deletion, union offset or identification).

    Old vertices absent from ``mapping`` are dropped. Several old vertices may
    map to one new vertex only if they share a class.
    """
    out = [-1] * n_new
    for old, new in mapping.items():
        if not 0 <= new < n_new:
            raise ColoringError(f"mapping target {new} out of range")
        cls = c.assignment[old]
        if out[new] not in (-1, cls):
            raise ColoringError(f"vertices merged into {new} carry different classes")
        out[new] = cls
    if -1 in out:
        raise ColoringError(f"mapping incomplete: new vertex {out.index(-1)} has no preimage")
    return Coloring(tuple(out), c.k)


def offset_mapping(n: int, offset: int) -> dict[int, int]:
    return {v: v + offset for v in range(n)}


def union_coloring(parts: Sequence[Coloring]) -> Coloring:
    """Concatenate colorings of the copies of a disjoint union, in order."""
    k = max((p.k for p in parts), default=0)
    return Coloring(tuple(c for p in parts for c in p.assignment), k)
