"""Named graphs and colorings transcribed from figure source code.

Figure vertices are numbered 1..n and drawn on a Hamiltonian cycle
``1-2-...-n-1``; chords are listed separately. Everything is converted to
0-based ids here. Repeated chords in the figure code (e.g. ``8/1`` after
``1/8``) are harmless: edges are collapsed on construction.
"""

from __future__ import annotations

from ..coloring import Coloring
from ..graph import Graph, from_edge_list, lcf_graph


def _pairs(spec: str) -> list[tuple[int, int]]:
    return [tuple(int(x) for x in item.split("/")) for item in spec.split(",")]


def _ring_with_chords(n: int, chords: str) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(a - 1, b - 1) for a, b in _pairs(chords)]
    return from_edge_list(n, edges)


def _three_classes(n: int, red: list[int], green: list[int]) -> Coloring:
    """Red -> 0, green -> 1, every remaining (blue) vertex -> 2; inputs 1-based."""
    red0 = [v - 1 for v in red]
    green0 = [v - 1 for v in green]
    taken = set(red0) | set(green0)
    blue0 = [v for v in range(n) if v not in taken]
    return Coloring.from_classes(n, [red0, green0, blue0])


ROBERTSON_CHORDS = (
    "1/5,1/16,2/13,2/9,3/18,3/7,4/15,4/12,6/17,6/13,7/11,8/19,8/15,9/17,10/5,"
    "10/14,14/18,16/11,17/9,17/6,18/14,18/3,19/12"
)
MCGEE_CHORDS = "1/8,2/19,3/15,4/11,5/22,6/18,7/14,8/1,9/21,10/17,11/4,12/24,13/20,16/23"
CAGE_3_9_CHORDS = (
    "1/46,2/52,3/19,4/32,5/14,6/49,7/57,8/25,9/40,10/30,11/20,12/44,13/37,15/23,16/41,"
    "17/56,18/27,21/48,22/34,24/53,26/45,28/36,29/50,31/55,33/43,35/58,38/54,39/47,42/51"
)
CAGE_3_11_CHORDS = (
    "1/79,2/15,3/55,4/38,5/67,6/103,7/49,8/18,9/110,10/72,11/40,12/32,13/24,14/46,16/90,"
    "17/63,19/35,20/43,21/57,22/87,23/104,25/96,26/76,27/37,29/91,30/58,31/66,33/52,"
    "34/100,36/82,39/61,41/93,42/78,44/68,45/108,47/83,48/59,50/77,51/88,53/107,54/95,"
    "56/73,60/98,62/106,64/75,65/85,69/97,70/89,71/81,74/101,80/105,84/94,86/111,92/102,"
    "99/112,28/109"
)
EQ_CAGE_4_5_3_EDGES = (
    "16/1,1/20,16/15,16/7,16/17,1/9,1/2,20/5,20/12,20/19,15/3,15/10,15/14,7/8,7/11,7/6,"
    "17/4,17/18,17/13,9/8,9/10,9/13,2/3,2/18,2/6,5/4,5/10,5/6,12/3,12/11,12/13,19/8,"
    "19/18,19/14,8/4,4/3,10/11,11/18,13/14,14/6"
)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


def heawood() -> Graph:
    return lcf_graph(14, [5, -5], 7)


def mcgee() -> Graph:
    return _ring_with_chords(24, MCGEE_CHORDS)


def cage_3_9_paper() -> Graph:
    return _ring_with_chords(58, CAGE_3_9_CHORDS)


def cage_3_11() -> Graph:
    return _ring_with_chords(112, CAGE_3_11_CHORDS)


def robertson() -> Graph:
    return _ring_with_chords(19, ROBERTSON_CHORDS)


def eq_cage_4_5_3() -> Graph:
    return from_edge_list(20, [(a - 1, b - 1) for a, b in _pairs(EQ_CAGE_4_5_3_EDGES)])


def mcgee_coloring() -> Coloring:
    return _three_classes(24, [6, 8, 10, 12, 14, 16, 20, 22], [2, 4, 7, 9, 13, 15, 18, 24])


def cage_3_9_coloring() -> Coloring:
    red = [2, 5, 7, 10, 13, 16, 19, 23, 25, 28, 33, 35, 38, 40, 42, 44, 47, 50, 53, 56]
    green = [3, 6, 9, 12, 15, 18, 20, 22, 26, 30, 32, 36, 39, 43, 46, 48, 52, 55, 58]
    return _three_classes(58, red, green)


def cage_3_11_coloring() -> Coloring:
    red = [2, 5, 8, 11, 14, 17, 20, 23, 26, 29, 32, 35, 38, 41, 44, 47, 49, 52, 55, 58, 61,
           64, 69, 71, 74, 79, 82, 85, 89, 92, 96, 98, 100, 103, 105, 108, 111]
    green = [1, 4, 7, 10, 13, 16, 19, 22, 25, 28, 31, 34, 37, 40, 43, 46, 50, 54, 57, 59, 62,
             65, 67, 70, 73, 76, 78, 80, 83, 86, 88, 91, 94, 99, 101, 104, 107, 110]
    return _three_classes(112, red, green)


def robertson_coloring() -> Coloring:
    return _three_classes(19, [2, 4, 6, 8, 10, 16, 18], [1, 7, 12, 14, 17])


def robertson_coloring_red7() -> Coloring:
    """The completed non-equitable coloring with a red class of size seven."""
    return _three_classes(19, [3, 5, 9, 11, 13, 15, 19], [2, 6, 8, 10, 12, 16, 18])


def eq_cage_4_5_3_coloring() -> Coloring:
    return _three_classes(20, [16, 2, 9, 20, 4, 14, 11], [3, 10, 13, 18, 6, 8])
