"""Bitmask-backed simple graphs and the elementary parameters everything else uses.

Vertices are 0..n-1 with n <= 64, so a neighbour set fits in one machine word
and set algebra on vertex sets is plain integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Invalid graph construction or a size outside the supported range."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbour set of v as a bitmask.

    Rows are validated to be symmetric, loop-free and within range, so every
    constructed Graph is a simple graph by representation.  Instances are
    immutable and safe to share between threads or processes.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            above = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(above):
                out.append((u, v))
        return out

    def permuted(self, perm: Sequence[int]) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            acc = 0
            for u in bits(self.adj[v]):
                acc |= 1 << perm[u]
            rows[perm[v]] = acc
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled 0.. in the given order."""
        k = len(vertices)
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != k:
            raise GraphError("duplicate vertices in induced subgraph request")
        rows = [0] * k
        for i, v in enumerate(vertices):
            for u in bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(k, tuple(rows))


@dataclass(frozen=True)
class BasicStats:
    min_degree: int
    max_degree: int
    edge_count: int
    connected: bool


# ---------------------------------------------------------------------------
# standard families


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("empty graph needs at least one vertex")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with vertices grouped in block order."""
    if not parts:
        raise GraphError("at least one part required")
    if any(p < 1 for p in parts):
        raise GraphError("zero or negative part size")
    n = sum(parts)
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    full = (1 << n) - 1
    rows = []
    start = 0
    for p in parts:
        block = ((1 << p) - 1) << start
        rows.extend([full & ~block] * p)
        start += p
    return Graph(n, tuple(rows))


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite([a, b])


_FAMILY_ARITY = {
    "complete": 1,
    "cycle": 1,
    "path": 1,
    "complete_bipartite": 2,
    "complete_multipartite": None,  # variadic
    "empty": 1,
}


def standard_family(name: str, params: Sequence[int]) -> Graph:
    """Build a named family member; used by the CLI ``construct family`` command."""
    if name not in _FAMILY_ARITY:
        raise GraphError(f"unknown family {name!r}")
    arity = _FAMILY_ARITY[name]
    if arity is not None and len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    if name == "complete":
        return complete_graph(params[0])
    if name == "cycle":
        return cycle_graph(params[0])
    if name == "path":
        return path_graph(params[0])
    if name == "complete_bipartite":
        return complete_bipartite(params[0], params[1])
    if name == "complete_multipartite":
        return complete_multipartite(list(params))
    return empty_graph(params[0])


# ---------------------------------------------------------------------------
# operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (u, v) gets index u * h.n + v."""
    n = g.n * h.n
    if n > MAX_VERTICES:
        raise GraphError(f"product would have {n} > {MAX_VERTICES} vertices")
    rows = [0] * n
    for u in range(g.n):
        base = u * h.n
        for v in range(h.n):
            row = h.adj[v] << base
            for u2 in bits(g.adj[u]):
                row |= 1 << (u2 * h.n + v)
            rows[base + v] = row
    return Graph(n, tuple(rows))


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside the ``allowed`` mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return _reach(g.adj, 0, (1 << g.n) - 1) == (1 << g.n) - 1


def diameter(g: Graph) -> int | float:
    """Maximum BFS distance over vertex pairs; ``math.inf`` when disconnected."""
    full = (1 << g.n) - 1
    best = 0
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            if not nxt:
                break
            dist += 1
            seen |= nxt
            frontier = nxt
        if seen != full:
            return math.inf
        best = max(best, dist)
    return best


def basic_stats(g: Graph) -> BasicStats:
    degs = g.degrees()
    return BasicStats(min(degs), max(degs), sum(degs) // 2, is_connected(g))


def max_matching_size(g: Graph) -> int:
    """Size of a maximum matching, by branch and bound over the lowest active vertex.

    A greedy matching seeds the bound; branches are cut when the remaining
    active vertices cannot beat it.  Exact at desk scale (n <= 64).
    """
    adj = g.adj
    full = (1 << g.n) - 1

    best = 0
    avail = full
    for v in range(g.n):  # greedy seed
        if avail >> v & 1:
            nb = adj[v] & avail
            if nb:
                u = (nb & -nb).bit_length() - 1
                avail &= ~(1 << v) & ~(1 << u)
                best += 1

    def active_count(mask: int) -> int:
        cnt = 0
        for v in bits(mask):
            if adj[v] & mask:
                cnt += 1
        return cnt

    def walk(mask: int, size: int) -> None:
        nonlocal best
        pick = -1
        for v in bits(mask):
            if adj[v] & mask:
                pick = v
                break
        if pick < 0:
            if size > best:
                best = size
            return
        if size + active_count(mask) // 2 <= best:
            return
        for u in bits(adj[pick] & mask):
            walk(mask & ~(1 << pick) & ~(1 << u), size + 1)
        walk(mask & ~(1 << pick), size)

    walk(full, 0)
    return best


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of g induces a graph isomorphic to h.

    Backtracking over injective maps with bitmask candidate filtering; meant
    for small patterns (|V(h)| <= 8).
    """
    if h.n > g.n:
        return False
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    full = (1 << g.n) - 1
    mapping = [0] * h.n

    def place(i: int, used: int) -> bool:
        if i == h.n:
            return True
        hv = order[i]
        cand = full & ~used
        for j in range(i):
            hu = order[j]
            gu = mapping[hu]
            if h.adj[hv] >> hu & 1:
                cand &= g.adj[gu]
            else:
                cand &= ~g.adj[gu]
            if not cand:
                return False
        for gv in bits(cand):
            mapping[hv] = gv
            if place(i + 1, used | 1 << gv):
                return True
        return False

    return place(0, 0)
