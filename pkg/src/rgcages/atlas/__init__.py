"""Bundled named cages and colorings, stored as graph6 plus JSON sidecars."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..coloring import Coloring, verify_coloring
from ..formats import coloring_from_json, from_graph6
from ..graph import Graph
from ..invariants import CageParams, girth, regularity

DATA_DIR = Path(__file__).resolve().parent
NAMES = ("petersen", "heawood", "mcgee", "cage-3-9-paper", "cage-3-11", "robertson", "eq-cage-4-5-3")


class AtlasError(LookupError):
    pass


@dataclass(frozen=True)
class AtlasEntry:
    name: str
    graph: Graph
    params: CageParams
    colorings: tuple[tuple[str, Coloring], ...]
    source: str

    def coloring(self, label: str) -> Coloring:
        for lab, c in self.colorings:
            if lab == label:
                return c
        raise AtlasError(f"{self.name} has no coloring labelled {label!r}")

    def equitable_colorings(self) -> list[tuple[str, Coloring]]:
        return [(lab, c) for lab, c in self.colorings if c.is_equitable]

    def summary(self) -> dict:
        return {
            "name": self.name,
            "order": self.graph.n,
            **self.params.as_dict(),
            "colorings": [{"label": lab, "census": list(c.census), "equitable": c.is_equitable}
                          for lab, c in self.colorings],
            "source": self.source,
        }


def _index(data_dir: Path = DATA_DIR) -> dict[str, dict]:
    with open(data_dir / "index.json") as fh:
        return {e["name"]: e for e in json.load(fh)["entries"]}


def check_integrity(entry: AtlasEntry) -> None:
    """Cheap structural checks; exact chromatic numbers are left to the verifier."""
    g, p = entry.graph, entry.params
    if regularity(g) != p.r:
        raise AtlasError(f"{entry.name}: not {p.r}-regular")
    gr = girth(g)
    if gr.acyclic or gr.value != p.g:
        raise AtlasError(f"{entry.name}: girth {gr.value} != {p.g}")
    for label, c in entry.colorings:
        if c.n != g.n or not verify_coloring(g, c):
            raise AtlasError(f"{entry.name}: coloring {label!r} is not proper")
        if label.startswith("equitable") and not c.is_equitable:
            raise AtlasError(f"{entry.name}: coloring {label!r} is not equitable")


def load(name: str, data_dir: Path = DATA_DIR, verify: bool = True) -> AtlasEntry:
    idx = _index(data_dir)
    if name not in idx:
        raise AtlasError(f"unknown atlas entry {name!r}; known: {', '.join(idx)}")
    meta = idx[name]
    graph = from_graph6((data_dir / f"{name}.g6").read_text())
    with open(data_dir / f"{name}.colorings.json") as fh:
        raw = json.load(fh)["colorings"]
    colorings = tuple((c["label"], coloring_from_json(c, graph.n)) for c in raw)
    p = meta["params"]
    entry = AtlasEntry(name, graph, CageParams(p["r"], p["g"], p["chi"], p["equitable"]), colorings,
                       meta["source"])
    if verify:
        check_integrity(entry)
    return entry


def entries(r: int | None = None, g: int | None = None, equitable_coloring: bool | None = None,
            data_dir: Path = DATA_DIR) -> list[AtlasEntry]:
    """All entries, optionally filtered by degree, girth, or presence of a bundled equitable coloring."""
    out = []
    for name in _index(data_dir):
        e = load(name, data_dir)
        if r is not None and e.params.r != r:
            continue
        if g is not None and e.params.g != g:
            continue
        if equitable_coloring is not None and bool(e.equitable_colorings()) != equitable_coloring:
            continue
        out.append(e)
    return out


def list_entries(**filters) -> list[dict]:
    return [e.summary() for e in entries(**filters)]
