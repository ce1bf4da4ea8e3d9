"""Exhaustive enumeration of labelled r-regular graphs, used as a minimality oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .coloring import chromatic_number, exists_equitable_k_coloring
from .constructions import n_r33, r33_cage
from .formats import to_graph6
from .graph import Graph
from .invariants import CageParams, girth


@dataclass(frozen=True)
class SearchBudget:
    max_order: int = 12
    node_limit: int = 50_000_000
    time_limit: float = 600.0

    def __post_init__(self):
        if self.max_order <= 0 or self.node_limit <= 0 or self.time_limit <= 0:
            raise ValueError("budget fields must be positive")


@dataclass
class EnumerationStats:
    n: int
    r: int
    nodes: int = 0
    graphs: int = 0
    complete: bool = True  # False when the budget ran out
    stopped: bool = False  # True when the visitor asked to stop

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "nodes": self.nodes, "graphs": self.graphs,
                "complete": self.complete, "stopped": self.stopped}


class _Budget(Exception):
    pass


class _Stop(Exception):
    pass


def enumerate_regular(n: int, r: int, visit: Callable[[Graph], Optional[bool]],
                      budget: SearchBudget | None = None) -> EnumerationStats:
    """Visit every labelled r-regular graph on n vertices with N(0) = {1..r}.

    Rows of the upper-triangular adjacency matrix are filled in order; row i
    picks exactly the edges vertex i still needs among later vertices with
    spare degree. Every r-regular graph on n vertices is isomorphic to at
    least one visited graph. ``visit`` may return True to stop early.
    """
    stats = EnumerationStats(n, r)
    if r < 0 or r >= n or (n * r) % 2:
        return stats
    budget = budget or SearchBudget(max_order=max(n, 1))
    deadline = time.monotonic() + budget.time_limit
    deg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]

    def link(u, v):
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1

    def unlink(u, v):
        adj[u].discard(v)
        adj[v].discard(u)
        deg[u] -= 1
        deg[v] -= 1

    def feasible(i: int) -> bool:
        # vertex j > i can still gain edges only from vertices in (i, n) other than itself
        slots = n - i - 2
        return all(r - deg[j] <= slots for j in range(i + 1, n))

    def row(i: int) -> None:
        stats.nodes += 1
        if stats.nodes > budget.node_limit or (stats.nodes & 1023 == 0 and time.monotonic() > deadline):
            raise _Budget
        if i == n:
            stats.graphs += 1
            if visit(Graph(n, adj)):
                raise _Stop
            return
        need = r - deg[i]
        cands = [j for j in range(i + 1, n) if deg[j] < r]
        if need > len(cands):
            return
        for chosen in combinations(cands, need):
            for j in chosen:
                link(i, j)
            if feasible(i):
                row(i + 1)
            for j in chosen:
                unlink(i, j)

    for j in range(1, r + 1):
        link(0, j)
    try:
        if feasible(0):
            row(1)
    except _Budget:
        stats.complete = False
    except _Stop:
        stats.stopped = True
    return stats


@dataclass
class MinOrderResult:
    params: CageParams
    order: int | None  # None when no witness up to the budget's max order
    inconclusive: bool
    witness: Graph | None = None
    witness_source: str = ""
    certificates: list[dict] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "order": self.order,
            "inconclusive": self.inconclusive,
            "witness_g6": to_graph6(self.witness) if self.witness is not None else None,
            "witness_source": self.witness_source,
            "certificates": self.certificates,
        }


def matches(g: Graph, params: CageParams) -> bool:
    """Does ``g`` (already r-regular) have the requested girth, chromatic number and equitability?"""
    gr = girth(g)
    if gr.acyclic or gr.value != params.g:
        return False
    chi, _ = chromatic_number(g)
    if chi != params.chi:
        return False
    if params.equitable:
        return exists_equitable_k_coloring(g, params.chi).found
    return True


def _construction_witness(params: CageParams, n: int) -> Graph | None:
    if params.g == 3 and params.chi == 3 and n_r33(params.r) == n:
        out = r33_cage(params.r)
        if matches(out.graph, params):
            return out.graph
    return None


def min_order(params: CageParams, budget: SearchBudget | None = None,
              use_constructions: bool = True) -> MinOrderResult:
    """Smallest order admitting an (r, g, chi)-graph, with exhaustion certificates below it.

    With ``use_constructions`` a known construction of the right order is tried
    before enumerating; without it every order is settled by enumeration alone.
    """
    budget = budget or SearchBudget()
    start = time.monotonic()
    r = params.r
    certs: list[dict] = []
    for n in range(r + 1, budget.max_order + 1):
        if (n * r) % 2:
            continue
        witness = _construction_witness(params, n) if use_constructions else None
        if witness is not None:
            return MinOrderResult(params, n, False, witness, "construction", certs)
        remaining = budget.time_limit - (time.monotonic() - start)
        if remaining <= 0:
            return MinOrderResult(params, None, True, certificates=certs)
        found: list[Graph] = []

        def visit(g: Graph) -> bool:
            if matches(g, params):
                found.append(g)
                return True
            return False

        stats = enumerate_regular(n, r, visit, SearchBudget(budget.max_order, budget.node_limit, remaining))
        if found:
            return MinOrderResult(params, n, False, found[0], "enumeration", certs)
        if not stats.complete:
            certs.append(stats.as_dict())
            return MinOrderResult(params, None, True, certificates=certs)
        certs.append(stats.as_dict())
    return MinOrderResult(params, None, False, certificates=certs)
