"""Immutable simple undirected graphs and the surgery primitives used by the constructions."""

from __future__ import annotations

from typing import Iterable, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when an operation would violate a graph invariant or precondition."""


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are values: every operation below returns a new graph.
    """

    __slots__ = ("n", "adj", "_sets", "_masks", "_edges")

    def __init__(self, n: int, adj: Sequence[Iterable[int]]):
        if n < 0 or len(adj) != n:
            raise GraphError("adjacency length must equal n")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(set(a))) for a in adj)
        self._sets = tuple(frozenset(a) for a in self.adj)
        self._masks: tuple[int, ...] | None = None
        self._edges: tuple[Edge, ...] | None = None
        self.validate()

    def validate(self) -> None:
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"loop at {v}")
                if v not in self._sets[u]:
                    raise GraphError(f"asymmetric adjacency {v}->{u}")

    # -- basic queries -------------------------------------------------
    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._sets[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self._sets[v]

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            self._edges = tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks, used by the search routines."""
        if self._masks is None:
            self._masks = tuple(sum(1 << u for u in a) for a in self.adj)
        return self._masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    adj: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {u}-{v} has an endpoint outside [0, {n})")
        u, v = norm_edge(u, v)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return Graph(n, [()] * n)


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; part ``i`` occupies a contiguous block of ids."""
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise GraphError("need at least two parts, each of size >= 1")
    label = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(label)
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v]])


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


def lcf_graph(n: int, shifts: Sequence[int], repeats: int) -> Graph:
    """Hamiltonian cubic graph from LCF notation."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    seq = list(shifts) * repeats
    for i, s in enumerate(seq):
        edges.append((i, (i + s) % n))
    return from_edge_list(n, edges)


# -- surgery -------------------------------------------------------------

def remove_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    adj = [set(a) for a in g.adj]
    for e in edges:
        u, v = norm_edge(int(e[0]), int(e[1]))
        if not g.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        adj[u].discard(v)
        adj[v].discard(u)
    return Graph(g.n, adj)


def add_edges(g: Graph, edges: Iterable[Sequence[int]]) -> Graph:
    """Add new edges; an edge that already exists is a hard error."""
    adj = [set(a) for a in g.adj]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"edge {u}-{v} out of range")
        u, v = norm_edge(u, v)
        if v in adj[u]:
            raise GraphError(f"duplicate edge {u}-{v}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(g.n, adj)


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the surviving vertices, relabelled compactly.

    Returns the new graph and the old-id -> new-id mapping of survivors.
    """
    gone = set(vs)
    for v in gone:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    mapping: dict[int, int] = {}
    for v in range(g.n):
        if v not in gone:
            mapping[v] = len(mapping)
    adj = [[mapping[u] for u in g.adj[v] if u in mapping] for v in mapping]
    return Graph(len(mapping), adj), mapping


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    keep = set(keep)
    return delete_vertices(g, [v for v in range(g.n) if v not in keep])


def subdivide_edge(g: Graph, e: Sequence[int]) -> tuple[Graph, int]:
    x, y = norm_edge(int(e[0]), int(e[1]))
    if not g.has_edge(x, y):
        raise GraphError(f"edge {x}-{y} not present")
    z = g.n
    adj = [set(a) for a in g.adj] + [{x, y}]
    adj[x].discard(y)
    adj[y].discard(x)
    adj[x].add(z)
    adj[y].add(z)
    return Graph(g.n + 1, adj), z


def disjoint_union(gs: Sequence[Graph]) -> tuple[Graph, list[int]]:
    offsets: list[int] = []
    adj: list[list[int]] = []
    for h in gs:
        off = len(adj)
        offsets.append(off)
        adj.extend([u + off for u in a] for a in h.adj)
    return Graph(len(adj), adj), offsets


def identify_vertices(g: Graph, group: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Merge ``group`` into one vertex holding the union of their neighborhoods.

    The merged vertex takes the place of the smallest id in the group. Members
    must be pairwise non-adjacent with pairwise disjoint neighborhoods, so no
    loop or parallel edge can arise.
    """
    members = sorted(set(group))
    if not members:
        raise GraphError("empty identification group")
    for v in members:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    seen: set[int] = set()
    for v in members:
        nb = g.neighbors(v)
        if nb & set(members):
            raise GraphError(f"group vertices adjacent at {v}")
        if nb & seen:
            raise GraphError(f"neighborhoods overlap at {v}")
        seen |= nb
    keep = members[0]
    rest = set(members[1:])
    mapping: dict[int, int] = {}
    for v in range(g.n):
        if v not in rest:
            mapping[v] = len(mapping)
    for v in rest:
        mapping[v] = mapping[keep]
    adj: list[set[int]] = [set() for _ in range(g.n - len(rest))]
    for u, v in g.edges:
        a, b = mapping[u], mapping[v]
        adj[a].add(b)
        adj[b].add(a)
    return Graph(len(adj), adj), mapping
