"""Planarity tests, pinned by a brute-force Kuratowski-subdivision oracle.

The oracle searches directly for a subdivision of K5 or K33: choose branch
vertices (degree-pruned), then pack internally disjoint paths for every
pattern edge by backtracking.  Exact and affordable for n <= 7.
"""

import math
from itertools import combinations

from ecgraphs.catalog import PLANAR_TWO_LINE_EC_NAMES, named_graph
from ecgraphs.graphs import (
    Graph,
    bits,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    diameter,
    is_connected,
    path_graph,
)
from ecgraphs.planarity import is_planar
from ecgraphs.search import enumerate_connected

from conftest import random_connected_graph


def _pack_paths(g: Graph, pairs, branch: set[int]) -> bool:
    used: set[int] = set()

    def route(i: int) -> bool:
        if i == len(pairs):
            return True
        s, t = pairs[i]

        def dfs(v: int, seen: set[int]) -> bool:
            for w in bits(g.adj[v]):
                if w == t:
                    internals = seen - {s}
                    used.update(internals)
                    if route(i + 1):
                        return True
                    used.difference_update(internals)
                    continue
                if w in seen or w in used or w in branch:
                    continue
                seen.add(w)
                if dfs(w, seen):
                    return True
                seen.remove(w)
            return False

        return dfs(s, {s})

    return route(0)


def _has_k5_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.degree(v) >= 4]
    for branch in combinations(cand, 5):
        pairs = list(combinations(branch, 2))
        if _pack_paths(g, pairs, set(branch)):
            return True
    return False


def _has_k33_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.degree(v) >= 3]
    for six in combinations(cand, 6):
        rest = set(six)
        for left in combinations(six, 3):
            if six[0] not in left:
                continue  # fix side of the smallest vertex: halves the work
            right = tuple(sorted(rest - set(left)))
            pairs = [(a, b) for a in left for b in right]
            if _pack_paths(g, pairs, set(six)):
                return True
    return False


def planar_oracle(g: Graph) -> bool:
    return not (_has_k5_subdivision(g) or _has_k33_subdivision(g))


def test_oracle_sanity():
    assert not planar_oracle(complete_graph(5))
    assert not planar_oracle(complete_bipartite(3, 3))
    assert planar_oracle(complete_graph(4))


def test_kuratowski_pair():
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))


def test_figures_are_planar():
    for name in PLANAR_TWO_LINE_EC_NAMES:
        assert is_planar(named_graph(name))


def test_trees_and_cycles(rng):
    for _ in range(50):
        n = rng.randrange(2, 20)
        tree = Graph.from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])
        assert is_planar(tree)
    for n in range(3, 16):
        assert is_planar(cycle_graph(n))
    assert is_planar(path_graph(10))


def test_oracle_agreement_exhaustive_to_order_7():
    for n in range(1, 8):
        for g in enumerate_connected(n):
            assert is_planar(g) == planar_oracle(g), g.edges()


def test_euler_consistency_and_triangulations():
    for n in range(3, 8):
        for g in enumerate_connected(n):
            if is_planar(g):
                assert g.edge_count() <= 3 * g.n - 6
    for name in ("Tc43", "Tc44"):
        g = named_graph(name)
        assert is_planar(g) and g.edge_count() == 3 * g.n - 6


def test_minor_closure_spot_checks(rng):
    done = 0
    while done < 200:
        g = random_connected_graph(rng, rng.randrange(3, 11), 0.4)
        if not is_planar(g):
            continue
        done += 1
        edges = g.edges()
        if edges:
            u, v = edges[rng.randrange(len(edges))]
            rows = list(g.adj)
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            assert is_planar(Graph(g.n, tuple(rows)))
        if g.n > 1:
            drop = rng.randrange(g.n)
            keep = [w for w in range(g.n) if w != drop]
            assert is_planar(g.induced(keep))


def test_subdivision_invariance(rng):
    # subdividing edges never changes planarity
    def subdivide_random(g, times):
        rows = [list() for _ in range(g.n)]
        edges = g.edges()
        n = g.n
        for _ in range(times):
            idx = rng.randrange(len(edges))
            u, v = edges.pop(idx)
            edges.append((u, n))
            edges.append((n, v))
            n += 1
        return Graph.from_edges(n, edges)

    for base, planar in ((complete_graph(5), False), (complete_bipartite(3, 3), False), (cycle_graph(6), True)):
        for times in (1, 3, 7):
            assert is_planar(subdivide_random(base, times)) == planar


def test_cited_diameter_edge_bound():
    # connected planar graphs obey |E| <= 4|V| - 4 - 3D
    for n in range(2, 8):
        for g in enumerate_connected(n):
            if is_planar(g):
                d = diameter(g)
                assert d != math.inf
                assert g.edge_count() <= 4 * g.n - 4 - 3 * d


def test_disconnected_inputs():
    two_k5 = Graph.from_edges(
        10,
        [(u, v) for u, v in combinations(range(5), 2)]
        + [(u + 5, v + 5) for u, v in combinations(range(5), 2)],
    )
    assert not is_planar(two_k5)
    sparse = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert not is_connected(sparse) and is_planar(sparse)
