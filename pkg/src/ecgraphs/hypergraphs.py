"""Hypergraphs with bitmask edges, their line graphs, and edge-level closure checks.

Edges are vertex subsets stored as bitmasks and kept sorted by integer value,
which fixes the edge indexing used everywhere (checks, line graphs, the text
format).  Closure checking works directly on edge intersections, so the number
of edges is not limited by the 64-vertex cap of the Graph type.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .ec import EcVerdict, _ec_split_search, _verdict
from .graphs import Graph, GraphError, MAX_VERTICES, bits


class HypergraphError(ValueError):
    """Invalid hypergraph construction."""


@dataclass(frozen=True)
class Hypergraph:
    """Vertices 0..n-1 and a sorted tuple of distinct nonempty edge bitmasks."""

    n: int
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise HypergraphError(f"vertex count must be 1..{MAX_VERTICES}, got {self.n}")
        full = (1 << self.n) - 1
        prev = 0
        for e in self.edges:
            if e == 0:
                raise HypergraphError("empty hyperedge")
            if e & ~full:
                raise HypergraphError("hyperedge references vertices out of range")
            if e == prev:
                raise HypergraphError("duplicate hyperedge")
            if e < prev:
                raise HypergraphError("hyperedges must be sorted by bitmask")
            prev = e

    @classmethod
    def from_vertex_sets(cls, n: int, edge_sets: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for es in edge_sets:
            mask = 0
            for v in es:
                if not 0 <= v < n:
                    raise HypergraphError(f"vertex {v} out of range for n={n}")
                mask |= 1 << v
            masks.append(mask)
        masks.sort()
        return cls(n, tuple(masks))

    def edge_count(self) -> int:
        return len(self.edges)

    def edge_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(bits(self.edges[i]))

    def uniformity(self) -> int | None:
        """Common edge cardinality, or None when edges have mixed sizes."""
        sizes = {e.bit_count() for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_uniform(self, k: int) -> bool:
        return all(e.bit_count() == k for e in self.edges)


# ---------------------------------------------------------------------------
# text format: first line "n m", then one line of ascending vertex indices per
# edge, edges ordered by ascending bitmask.


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in bits(e)))
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise HypergraphError("empty hypergraph text")
    head = lines[0].split()
    if len(head) != 2:
        raise HypergraphError("header must be 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise HypergraphError(f"non-numeric header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise HypergraphError(f"expected {m} edge lines, got {len(lines) - 1}")
    edge_sets = []
    for ln in lines[1:]:
        try:
            vs = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise HypergraphError(f"non-numeric edge line: {ln!r}") from exc
        edge_sets.append(vs)
    return Hypergraph.from_vertex_sets(n, edge_sets)


# ---------------------------------------------------------------------------
# operations


def line_graph_of_hypergraph(h: Hypergraph) -> Graph:
    """Graph with one vertex per edge; adjacency iff the edges intersect."""
    m = len(h.edges)
    if m == 0:
        raise HypergraphError("line graph of an edgeless hypergraph is empty")
    if m > MAX_VERTICES:
        raise HypergraphError(f"line graph would have {m} > {MAX_VERTICES} vertices")
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if h.edges[i] & h.edges[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(m, tuple(rows))


def hyperedge_adjacency(h: Hypergraph) -> list[int]:
    """Per-edge adjacency bitsets over edge indices (intersection = adjacency)."""
    by_vertex = [0] * h.n
    for idx, e in enumerate(h.edges):
        for v in bits(e):
            by_vertex[v] |= 1 << idx
    out = []
    for idx, e in enumerate(h.edges):
        acc = 0
        for v in bits(e):
            acc |= by_vertex[v]
        out.append(acc & ~(1 << idx))
    return out


def is_n_line_ec_hyper(h: Hypergraph, n: int) -> EcVerdict:
    """Edge-level closure check, never materializing the line graph."""
    m = len(h.edges)
    if not 1 <= n <= m:
        raise HypergraphError(f"level must be 1..{m} for this hypergraph, got {n}")
    adjacency = hyperedge_adjacency(h)
    items = [tuple(bits(e)) for e in h.edges]
    return _verdict(n, _ec_split_search(adjacency, m, n), items)


def crossing_hypergraph(x: int, y: int, k: int) -> Hypergraph:
    """All k-subsets of X + Y meeting both sides, X the first x vertices."""
    if not (x >= y >= 1):
        raise HypergraphError(f"need x >= y >= 1, got x={x}, y={y}")
    if k < 2:
        raise HypergraphError(f"edge size must be at least 2, got {k}")
    n = x + y
    if n > MAX_VERTICES:
        raise HypergraphError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    if k > n:
        raise HypergraphError(f"edge size {k} exceeds the vertex count {n}")
    xmask = (1 << x) - 1
    ymask = ((1 << y) - 1) << x
    masks = []
    for combo in combinations(range(n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if mask & xmask and mask & ymask:
            masks.append(mask)
    masks.sort()
    return Hypergraph(n, tuple(masks))


def star_dual(g: Graph) -> Hypergraph:
    """Hypergraph on E(g) whose hyperedges are the vertex stars of g.

    The line graph of the result is isomorphic to g; a k-regular g gives a
    k-uniform result.  Isolated vertices (empty star) and single-edge
    components (duplicate stars) are rejected.
    """
    edges = g.edges()
    m = len(edges)
    if m > MAX_VERTICES:
        raise GraphError(f"star dual would have {m} > {MAX_VERTICES} vertices")
    degs = g.degrees()
    if any(d == 0 for d in degs):
        raise GraphError("star dual undefined for graphs with isolated vertices")
    for u, v in edges:
        if degs[u] == 1 and degs[v] == 1:
            raise GraphError("star dual undefined for single-edge components")
    stars = [0] * g.n
    for idx, (u, v) in enumerate(edges):
        stars[u] |= 1 << idx
        stars[v] |= 1 << idx
    stars.sort()
    return Hypergraph(m, tuple(stars))


def cross_join_hypergraphs(h1: Hypergraph, h2: Hypergraph, k: int) -> Hypergraph:
    """Union of two k-uniform hypergraphs (h2 shifted up) plus all k-subsets
    meeting both vertex sets."""
    if not h1.is_uniform(k) or not h2.is_uniform(k):
        raise HypergraphError(f"both hypergraphs must be {k}-uniform")
    if not (h1.n >= h2.n >= 2 * k - 1):
        raise HypergraphError(f"need |V1| >= |V2| >= {2 * k - 1}, got {h1.n}, {h2.n}")
    n = h1.n + h2.n
    if n > MAX_VERTICES:
        raise HypergraphError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    mask1 = (1 << h1.n) - 1
    mask2 = ((1 << h2.n) - 1) << h1.n
    masks = list(h1.edges) + [e << h1.n for e in h2.edges]
    for combo in combinations(range(n), k):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if mask & mask1 and mask & mask2:
            masks.append(mask)
    masks.sort()
    return Hypergraph(n, tuple(masks))
