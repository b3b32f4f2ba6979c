"""Isomorph-free exhaustive generation and the named classification searches.

Generation is by canonical augmentation: a graph on k+1 vertices is accepted
exactly when its newest vertex lies in the canonical-deletion orbit (the
eligible vertices of the first equitable-refinement cell containing one,
tie-broken by minimum canonical label), and neighbourhoods of a parent are
taken one per automorphism orbit.  Every isomorphism class is therefore
produced exactly once with no global seen-set, the tree splits into
independent subtrees for parallel runs, and pruning hooks (edge budgets,
final-min-degree lookahead, intermediate planarity) never lose survivors
because ancestors inherit the pruned bounds.

Acceptance is staged so the common case is cheap: a cheaper-degree eligible
vertex rejects immediately, a discrete refinement accepts without search, and
only ties fall through to the full canonical-labelling orbit test.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .canon import canonical_form, canonical_search, orbit_partition, refine_partition
from .ec import is_n_ec, is_n_line_ec
from .graph6 import Graph6Error, parse_graph6
from .graphs import Graph, bits, is_connected, _reach
from .planarity import lr_planar_rows

MAX_SEARCH_ORDER = 12


@dataclass(frozen=True)
class SearchConstraints:
    """Structural bounds plus a cheapest-first chain of named final filters."""

    max_edges: int | None = None
    final_min_degree: int | None = None
    require_connected: bool = True
    predicates: tuple[str, ...] = ()


@dataclass
class SearchReport:
    name: str
    max_order: int
    generated: int
    per_filter_rejected: dict[str, int]
    survivors: list[str]
    wall_ms: float
    errors: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "max_order": self.max_order,
            "counts": {
                "generated": self.generated,
                "per_filter_rejected": dict(self.per_filter_rejected),
            },
            "survivors": list(self.survivors),
            "wall_ms": round(self.wall_ms, 3),
        }
        if self.errors:
            out["errors"] = self.errors
        return out


# ---------------------------------------------------------------------------
# named final filters


def _pred_two_line_ec(g: Graph) -> bool:
    return g.edge_count() >= 2 and is_n_line_ec(g, 2).holds


def _pred_two_ec(g: Graph) -> bool:
    return g.n >= 2 and is_n_ec(g, 2).holds


def _pred_planar(g: Graph) -> bool:
    m = g.edge_count()
    if g.n >= 3 and m > 3 * g.n - 6:
        return False
    if g.n <= 4 or m <= 8:
        return True
    return lr_planar_rows(g.n, g.adj)


def predicate_functions(names: Sequence[str]) -> list[tuple[str, Callable[[Graph], bool]]]:
    out: list[tuple[str, Callable[[Graph], bool]]] = []
    for name in names:
        if name.startswith("edge_count="):
            target = int(name.split("=", 1)[1])
            out.append((name, lambda g, m=target: g.edge_count() == m))
        elif name == "planar":
            out.append((name, _pred_planar))
        elif name == "two_line_ec":
            out.append((name, _pred_two_line_ec))
        elif name == "two_ec":
            out.append((name, _pred_two_ec))
        elif name == "connected":
            out.append((name, is_connected))
        else:
            raise ValueError(f"unknown predicate {name!r}")
    return out


# ---------------------------------------------------------------------------
# canonical augmentation


def _non_cut_mask(rows: Sequence[int], k: int) -> int:
    """Vertices whose removal leaves the rest connected (k-1 >= 1 vertices)."""
    if k == 1:
        return 1
    full = (1 << k) - 1
    out = 0
    for v in range(k):
        allowed = full & ~(1 << v)
        start = 1 if v == 0 else 0
        if _reach(rows, start, allowed) == allowed:
            out |= 1 << v
    return out


def _accepts(rows: list[int], connected: bool) -> bool:
    """Canonical-deletion test for the newest vertex of a candidate child."""
    k = len(rows)
    if k == 1:
        return True
    vn = k - 1
    full = (1 << k) - 1
    dnew = rows[vn].bit_count()

    smaller = 0
    for v in range(vn):
        if rows[v].bit_count() < dnew:
            smaller |= 1 << v
    eligible = full if not connected else -1  # lazy when connectivity matters
    if smaller:
        if eligible < 0:
            eligible = _non_cut_mask(rows, k)
        if smaller & eligible:
            return False

    cells = refine_partition(k, rows, [full])
    ci = next(i for i, c in enumerate(cells) if c >> vn & 1)
    before = 0
    for c in cells[:ci]:
        before |= c
    before &= ~smaller
    if before:
        if eligible < 0:
            eligible = _non_cut_mask(rows, k)
        if before & eligible:
            return False
    if eligible < 0:
        if cells[ci] == 1 << vn:
            return True
        eligible = _non_cut_mask(rows, k)
    cstar = cells[ci] & eligible
    if cstar == 1 << vn:
        return True

    perm, gens = canonical_search(k, rows)
    orb = orbit_partition(k, gens)
    chosen = min(bits(cstar), key=lambda v: perm[v])
    return orb[chosen] == orb[vn]


def _neighborhood_orbit_reps(k: int, rows: Sequence[int]) -> set[int] | None:
    """One representative neighbourhood per automorphism orbit, or None when
    the group is trivial and every subset is its own representative."""
    full = (1 << k) - 1
    cells = refine_partition(k, rows, [full])
    if len(cells) == k:
        return None
    _, gens = canonical_search(k, rows)
    if not gens:
        return None
    maps = [[1 << g[v] for v in range(k)] for g in gens]
    reps: set[int] = set()
    seen = bytearray(1 << k)
    for mask in range(1 << k):
        if seen[mask]:
            continue
        reps.add(mask)
        seen[mask] = 1
        stack = [mask]
        while stack:
            cur = stack.pop()
            for mp in maps:
                img = 0
                mm = cur
                while mm:
                    low = mm & -mm
                    img |= mp[low.bit_length() - 1]
                    mm ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return reps


def _grow(
    rows: list[int],
    m_now: int,
    target: int,
    cons: SearchConstraints,
    preds: list[tuple[str, Callable[[Graph], bool]]],
    counters: dict[str, int],
    planar_prune: bool,
    frontier_at: int | None = None,
) -> Iterator[Graph | tuple[tuple[int, ...], int]]:
    """Expand an accepted graph towards ``target`` vertices, yielding survivors.

    With ``frontier_at`` set, accepted graphs of that order are yielded as raw
    ``(rows, edge_count)`` work units instead of being expanded (parallel mode).
    """
    k = len(rows)
    child_order = k + 1
    r = target - child_order
    connected = cons.require_connected
    fmd = cons.final_min_degree or 0

    need = fmd - r  # child min-degree lookahead: degrees grow <= 1 per addition
    forced = 0
    if need > 0:
        for v in range(k):
            d = rows[v].bit_count()
            if d + 1 < need:
                return
            if d < need:
                forced |= 1 << v
    min_sz = max(need, 1 if connected else 0)
    max_sz = k
    if cons.max_edges is not None:
        budget = cons.max_edges - m_now - (r if connected else 0)
        if budget < min_sz:
            return
        max_sz = min(max_sz, budget)

    reps = _neighborhood_orbit_reps(k, rows)
    final = child_order == target
    for nb in range(1 << k):
        if nb & forced != forced:
            continue
        sz = nb.bit_count()
        if sz < min_sz or sz > max_sz:
            continue
        if reps is not None and nb not in reps:
            continue
        child = list(rows)
        child.append(nb)
        mm = nb
        while mm:
            low = mm & -mm
            child[low.bit_length() - 1] |= 1 << k
            mm ^= low
        if final and fmd and any(row.bit_count() < fmd for row in child):
            continue
        if not _accepts(child, connected):
            continue
        if final:
            counters["generated"] += 1
            g = Graph(child_order, tuple(child))
            ok = True
            for name, fn in preds:
                if not fn(g):
                    counters[name] += 1
                    ok = False
                    break
            if ok:
                yield g
        else:
            if planar_prune and not lr_planar_rows(child_order, child):
                continue
            if frontier_at is not None and child_order == frontier_at:
                yield tuple(child), m_now + sz
            else:
                yield from _grow(child, m_now + sz, target, cons, preds, counters, planar_prune, frontier_at)


def _enumerate_order(
    target: int,
    cons: SearchConstraints,
    counters: dict[str, int],
    planar_prune: bool = False,
    frontier_at: int | None = None,
) -> Iterator[Graph | tuple[tuple[int, ...], int]]:
    if not 1 <= target <= MAX_SEARCH_ORDER:
        raise ValueError(f"order must be 1..{MAX_SEARCH_ORDER}, got {target}")
    root = [0]
    if target == 1:
        fmd = cons.final_min_degree or 0
        if fmd > 0:
            return
        counters["generated"] += 1
        g = Graph(1, (0,))
        for name, fn in predicate_functions(cons.predicates):
            if not fn(g):
                counters[name] += 1
                return
        yield g
        return
    preds = predicate_functions(cons.predicates)
    yield from _grow(root, 0, target, cons, preds, counters, planar_prune, frontier_at)


def new_counters(cons: SearchConstraints) -> dict[str, int]:
    counters = {"generated": 0}
    for name in cons.predicates:
        counters[name] = 0
    return counters


def enumerate_connected(order: int, constraints: SearchConstraints | None = None) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of (by default
    connected) graphs on ``order`` vertices satisfying the constraints."""
    cons = constraints or SearchConstraints()
    counters = new_counters(cons)
    for item in _enumerate_order(order, cons, counters):
        yield item  # type: ignore[misc]


# ---------------------------------------------------------------------------
# named searches


_NAMED = {"planar_2lec", "min_2ec", "nine_edge_2lec"}


def _constraints_for(name: str, order: int) -> tuple[SearchConstraints, bool]:
    """(constraints, intermediate_planar_prune) for one target order."""
    if name == "planar_2lec":
        max_edges = 3 * order - 6 if order >= 3 else None
        return (
            SearchConstraints(
                max_edges=max_edges,
                final_min_degree=3,
                predicates=("planar", "two_line_ec"),
            ),
            True,
        )
    if name == "min_2ec":
        # a 2-e.c. graph has min degree >= 4: each open neighbourhood induces a
        # graph with no isolated and no universal vertex, impossible on <= 3
        # vertices, so every neighbourhood has at least 4 members
        return SearchConstraints(final_min_degree=4, predicates=("two_ec",)), False
    if name == "nine_edge_2lec":
        return (
            SearchConstraints(
                max_edges=9,
                final_min_degree=3,
                predicates=("edge_count=9", "two_line_ec"),
            ),
            False,
        )
    raise ValueError(f"unknown named search {name!r}")


def _orders_for(name: str, max_order: int) -> range:
    if name == "nine_edge_2lec":
        # 9 edges with min degree 3 force at most 2*9/3 = 6 vertices
        return range(1, min(max_order, 6) + 1)
    return range(1, max_order + 1)


def _expand_unit(args: tuple) -> tuple[dict[str, int], list[str]]:
    rows, m_now, target, cons, planar_prune = args
    counters = new_counters(cons)
    preds = predicate_functions(cons.predicates)
    survivors = [
        canonical_form(g)
        for g in _grow(list(rows), m_now, target, cons, preds, counters, planar_prune)
    ]
    return counters, survivors


def _search_one_order(
    target: int, cons: SearchConstraints, planar_prune: bool, workers: int
) -> tuple[dict[str, int], list[str]]:
    counters = new_counters(cons)
    if workers <= 1 or target <= 6:
        survivors = [
            canonical_form(g)  # type: ignore[arg-type]
            for g in _enumerate_order(target, cons, counters, planar_prune)
        ]
        return counters, survivors
    frontier_at = 6 if target <= 9 else 7
    units = list(_enumerate_order(target, cons, counters, planar_prune, frontier_at))
    jobs = [(rows, m_now, target, cons, planar_prune) for rows, m_now in units]
    survivors: list[str] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for unit_counters, unit_survivors in pool.map(_expand_unit, jobs):
            for key, val in unit_counters.items():
                counters[key] = counters.get(key, 0) + val
            survivors.extend(unit_survivors)
    return counters, survivors


def run_named_search(name: str, max_order: int, workers: int = 1) -> SearchReport:
    """Run one of the classification searches and return its report."""
    norm = name.replace("-", "_")
    if norm not in _NAMED:
        raise ValueError(f"unknown named search {name!r}")
    if not 1 <= max_order <= MAX_SEARCH_ORDER:
        raise ValueError(f"max_order must be 1..{MAX_SEARCH_ORDER}, got {max_order}")
    t0 = time.perf_counter()
    generated = 0
    rejected: dict[str, int] = {}
    survivors: list[str] = []
    for order in _orders_for(norm, max_order):
        cons, planar_prune = _constraints_for(norm, order)
        counters, found = _search_one_order(order, cons, planar_prune, workers)
        generated += counters.pop("generated")
        for key, val in counters.items():
            rejected[key] = rejected.get(key, 0) + val
        survivors.extend(found)
    survivors.sort()
    wall_ms = (time.perf_counter() - t0) * 1000.0
    return SearchReport(norm, max_order, generated, rejected, survivors, wall_ms)


# ---------------------------------------------------------------------------
# external stream filtering


def filter_stream(
    lines: Iterable[str],
    constraints: SearchConstraints | None = None,
    lenient: bool = False,
) -> SearchReport:
    """Filter externally generated graph6 lines through the constraint chain.

    Input is deduplicated by canonical form before filtering.  Malformed lines
    raise (with their line number) unless ``lenient`` is set, in which case
    they are recorded in the report and processing continues.
    """
    cons = constraints or SearchConstraints()
    preds = predicate_functions(cons.predicates)
    t0 = time.perf_counter()
    rejected: dict[str, int] = {}
    errors: list[dict] = []
    seen: set[str] = set()
    survivors: list[str] = []
    generated = 0
    max_seen = 0

    def reject(key: str) -> None:
        rejected[key] = rejected.get(key, 0) + 1

    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        try:
            if not text:
                raise Graph6Error("blank line", 0)
            g = parse_graph6(text)
        except Graph6Error as exc:
            if not lenient:
                raise ValueError(f"line {lineno}: {exc}") from exc
            errors.append({"line": lineno, "message": str(exc)})
            continue
        generated += 1
        max_seen = max(max_seen, g.n)
        form = canonical_form(g)
        if form in seen:
            reject("duplicate")
            continue
        seen.add(form)
        if cons.require_connected and not is_connected(g):
            reject("connected")
            continue
        if cons.max_edges is not None and g.edge_count() > cons.max_edges:
            reject("max_edges")
            continue
        if cons.final_min_degree and min(g.degrees()) < cons.final_min_degree:
            reject("min_degree")
            continue
        ok = True
        for name, fn in preds:
            if not fn(g):
                reject(name)
                ok = False
                break
        if ok:
            survivors.append(form)
    survivors.sort()
    wall_ms = (time.perf_counter() - t0) * 1000.0
    return SearchReport("filter", max_seen, generated, rejected, survivors, wall_ms, errors)
