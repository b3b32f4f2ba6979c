"""Constructions that preserve or create the 2-line e.c. property, plus Paley graphs."""

from __future__ import annotations

from .fields import FiniteField
from .graphs import Graph, GraphError, MAX_VERTICES

MAX_PALEY_ORDER = 64


def cone(g: Graph) -> Graph:
    """Add one new vertex adjacent to every vertex of g."""
    n = g.n + 1
    if n > MAX_VERTICES:
        raise GraphError(f"cone would have {n} > {MAX_VERTICES} vertices")
    top = 1 << g.n
    rows = tuple(row | top for row in g.adj) + ((1 << g.n) - 1,)
    return Graph(n, rows)


def join_independent(g: Graph, s: int) -> Graph:
    """Add s >= 2 pairwise non-adjacent vertices, each adjacent to all of g."""
    if s < 2:
        raise GraphError(f"independent set size must be at least 2, got {s}")
    n = g.n + s
    if n > MAX_VERTICES:
        raise GraphError(f"join would have {n} > {MAX_VERTICES} vertices")
    news = ((1 << s) - 1) << g.n
    old = (1 << g.n) - 1
    rows = tuple(row | news for row in g.adj) + (old,) * s
    return Graph(n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus all cross edges (g2's vertices shifted up by g1.n)."""
    n = g1.n + g2.n
    if n > MAX_VERTICES:
        raise GraphError(f"join would have {n} > {MAX_VERTICES} vertices")
    mask1 = (1 << g1.n) - 1
    mask2 = ((1 << g2.n) - 1) << g1.n
    rows = tuple(row | mask2 for row in g1.adj)
    rows += tuple((row << g1.n) | mask1 for row in g2.adj)
    return Graph(n, rows)


def paley(q: int) -> Graph:
    """Paley graph on GF(q), q = p^k <= 64 and q = 1 (mod 4).

    Vertices are field elements (integer encoding); u ~ v iff u - v is a
    nonzero square.  The congruence makes -1 a square, so adjacency is
    symmetric and the graph is (q-1)/2-regular.
    """
    field = FiniteField(q)  # validates the prime-power requirement
    if q > MAX_PALEY_ORDER:
        raise GraphError(f"paley graph order {q} exceeds the {MAX_PALEY_ORDER}-vertex limit")
    if q % 4 != 1:
        raise GraphError(f"paley graph needs q = 1 (mod 4), got {q}")
    squares = 0
    for x in range(1, q):
        squares |= 1 << field.mul(x, x)
    rows = [0] * q
    for u in range(q):
        for v in range(u + 1, q):
            if squares >> field.sub(u, v) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(q, tuple(rows))
