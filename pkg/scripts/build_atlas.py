#!/usr/bin/env python3
"""Regenerate the bundled atlas data files from the transcriptions in rgcages.atlas.figures.

Usage: python scripts/build_atlas.py [OUT_DIR]
"""

import json
import sys
from pathlib import Path

from rgcages.atlas import DATA_DIR
from rgcages.atlas import figures as fig
from rgcages.coloring import exists_equitable_k_coloring
from rgcages.formats import coloring_to_json, to_graph6
from rgcages.invariants import bipartition
from rgcages.coloring import Coloring


def petersen_equitable():
    w = exists_equitable_k_coloring(fig.petersen(), 3)
    assert w.coloring is not None
    return w.coloring


def heawood_bipartition():
    return Coloring(bipartition(fig.heawood()).sides, 2)


ENTRIES = [
    ("petersen", fig.petersen, (3, 5, 3, True), "standard definition: outer 5-cycle, spokes, inner pentagram",
     [("equitable-search", petersen_equitable)]),
    ("heawood", fig.heawood, (3, 6, 2, True), "standard definition: LCF [5,-5]^7",
     [("equitable-bipartition", heawood_bipartition)]),
    ("mcgee", fig.mcgee, (3, 7, 3, True), "transcribed figure: McGee graph, (3,7)-cage",
     [("equitable-figure", fig.mcgee_coloring)]),
    ("cage-3-9-paper", fig.cage_3_9_paper, (3, 9, 3, True),
     "transcribed figure: one of the eighteen (3,9)-cages", [("equitable-figure", fig.cage_3_9_coloring)]),
    ("cage-3-11", fig.cage_3_11, (3, 11, 3, True), "transcribed figure: the (3,11)-cage",
     [("equitable-figure", fig.cage_3_11_coloring)]),
    ("robertson", fig.robertson, (4, 5, 3, False), "transcribed figure: Robertson graph, (4,5)-cage",
     [("figure-7-5-7", fig.robertson_coloring), ("figure-red-7", fig.robertson_coloring_red7)]),
    ("eq-cage-4-5-3", fig.eq_cage_4_5_3, (4, 5, 3, True),
     "transcribed figure: order-20 (4,5,3)-equitable cage", [("equitable-figure", fig.eq_cage_4_5_3_coloring)]),
]


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for name, build, (r, g, chi, eq), source, colorings in ENTRIES:
        graph = build()
        (out / f"{name}.g6").write_text(to_graph6(graph) + "\n")
        sidecar = {"colorings": [{"label": label, **coloring_to_json(make())} for label, make in colorings]}
        (out / f"{name}.colorings.json").write_text(json.dumps(sidecar, indent=1) + "\n")
        index.append({"name": name, "order": graph.n,
                      "params": {"r": r, "g": g, "chi": chi, "equitable": eq}, "source": source})
    (out / "index.json").write_text(json.dumps({"entries": index}, indent=1) + "\n")


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else DATA_DIR)
