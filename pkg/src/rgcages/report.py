"""Measure a graph (and optional coloring) against claimed (r, g, chi) parameters."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from .coloring import Coloring, chromatic_number, greedy_clique, verify_coloring
from .graph import Graph
from .invariants import CageParams, bipartition, girth, is_connected, regularity

EXACT_CHI_LIMIT = 60


@dataclass
class VerificationReport:
    claim: str
    measured: dict[str, Any]
    expected: dict[str, Any]
    passed: bool
    runtime: float = 0.0
    stats: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "passed": self.passed,
            "measured": self.measured,
            "expected": self.expected,
            "stats": self.stats,
            "notes": self.notes,
        }
        if timing:
            out["runtime"] = round(self.runtime, 4)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.as_dict(timing), sort_keys=True)

    def text(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        diffs = [
            f"{key}={self.measured.get(key)!r}" + ("" if self.measured.get(key) == val else f" (expected {val!r})")
            for key, val in self.expected.items()
        ]
        return f"[{mark}] {self.claim}: " + ", ".join(diffs)


def finalize(claim: str, measured: dict, expected: dict, start: float, **extra) -> VerificationReport:
    passed = all(measured.get(k) == v for k, v in expected.items())
    return VerificationReport(claim, measured, expected, passed, time.perf_counter() - start, **extra)


def chromatic_measure(g: Graph, coloring: Coloring | None = None,
                      exact_limit: int = EXACT_CHI_LIMIT) -> tuple[int | None, str]:
    """Chromatic number and how it was obtained.

    Exact search up to ``exact_limit`` vertices. Above that the value is
    reported only when a proper witness coloring meets a lower bound from a
    clique or an odd cycle; otherwise None.
    """
    if g.n <= exact_limit:
        return chromatic_number(g)[0], "exact"
    lower = len(greedy_clique(g)) if g.n else 0
    bip = bipartition(g)
    if not bip.bipartite:
        lower = max(lower, 3)
    elif g.m:
        return 2, "bipartition"
    if coloring is not None and verify_coloring(g, coloring):
        upper = coloring.nonempty_classes()
        if upper == lower:
            return upper, "witness+odd-cycle" if lower == 3 else "witness+clique"
    return None, "undetermined"


def measure(g: Graph, coloring: Coloring | None = None, exact_limit: int = EXACT_CHI_LIMIT) -> dict[str, Any]:
    gr = girth(g)
    connected, ncomp = is_connected(g)
    chi, method = chromatic_measure(g, coloring, exact_limit)
    out: dict[str, Any] = {
        "order": g.n,
        "r": regularity(g),
        "g": None if gr.acyclic else gr.value,
        "chi": chi,
        "chi_method": method,
        "components": ncomp,
        "connected": connected,
    }
    if coloring is not None:
        out["coloring_proper"] = verify_coloring(g, coloring)
        out["census"] = list(coloring.census)
        out["equitable"] = coloring.is_equitable
    return out


def verify_graph(g: Graph, params: CageParams, coloring: Coloring | None = None,
                 claim: str = "graph", order: int | None = None,
                 exact_limit: int = EXACT_CHI_LIMIT) -> VerificationReport:
    start = time.perf_counter()
    measured = measure(g, coloring, exact_limit)
    expected: dict[str, Any] = {"r": params.r, "g": params.g, "chi": params.chi}
    if order is not None:
        expected["order"] = order
    if coloring is not None:
        expected["coloring_proper"] = True
        if params.equitable:
            expected["equitable"] = True
    return finalize(claim, measured, expected, start)
