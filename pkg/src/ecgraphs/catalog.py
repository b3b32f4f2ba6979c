"""Small named graphs used as classification targets and in tests.

Tc20..Tc44 are the five planar 2-line e.c. graphs (atlas numbering, order 7),
entered from their published planar drawings with vertices 0..6; Tc43 is the
heptahedral graph 34 and Tc44 the pentagonal-bipyramid (Johnson solid 13)
skeleton.  All comparisons elsewhere go through canonical forms, so the
labelling choice is immaterial.
"""

from __future__ import annotations

from .graphs import Graph

_EDGE_LISTS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "Tc20": (
        7,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (4, 6), (5, 6)],
    ),
    "Tc30": (
        7,
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)],
    ),
    "Tc39": (
        7,
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (4, 6), (5, 6)],
    ),
    "Tc43": (
        7,
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (4, 5), (4, 6), (5, 6)],
    ),
    "Tc44": (
        7,
        [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 6), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6), (5, 6)],
    ),
}

PLANAR_TWO_LINE_EC_NAMES = ("Tc20", "Tc30", "Tc39", "Tc43", "Tc44")


def named_graph(name: str) -> Graph:
    try:
        n, edges = _EDGE_LISTS[name]
    except KeyError:
        raise ValueError(f"unknown catalog graph {name!r}") from None
    return Graph.from_edges(n, edges)


def planar_two_line_ec_graphs() -> list[Graph]:
    """The five order-7 planar 2-line e.c. graphs, in catalog order."""
    return [named_graph(name) for name in PLANAR_TWO_LINE_EC_NAMES]
