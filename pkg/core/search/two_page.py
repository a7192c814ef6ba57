"""
2-page exact search: circular orders outside, page assignments inside.

For a fixed order only interleaving edge pairs matter, and they form a
conflict graph. Crossings are conflict edges whose ends share a page;
crossed edges are conflict-graph vertices with a same-page neighbour.
Components of the conflict graph are solved independently by branch and
bound with the first edge of each pinned to page 0.
"""
import itertools
import logging
import time
from typing import Dict, List, Optional, Set, Tuple

from core.graph import Graph
from core.layout import BookEmbedding, baseline_2page, canonicalize, count
from core.settings import SearchLimits
from .result import ExplorationBudget, Measure, Objective, SearchResult, Style, check_cap, resolve_limits
from .sjt import sjt_transpositions

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


# ==================== Conflict Graph ====================

class ConflictTracker:
    """Interleaving edge pairs of the current order, kept up to date across transpositions."""

    def __init__(self, g: Graph, order: List[int]):
        self.g = g
        self.order = list(order)
        self.pos = {v: i for i, v in enumerate(self.order)}
        self._ends = {e.id: (e.u, e.v) for e in g.edges()}
        self.pairs: Set[Pair] = set()
        edges = list(g.edges())
        for i, e in enumerate(edges):
            for f in edges[i + 1:]:
                if self._interleave(e.u, e.v, f.u, f.v):
                    self.pairs.add(_key(e.id, f.id))

    def _interleave(self, a: int, b: int, c: int, d: int) -> bool:
        if len({a, b, c, d}) < 4:
            return False
        pos = self.pos
        i, j = sorted((pos[a], pos[b]))
        return (i < pos[c] < j) != (i < pos[d] < j)

    def swap(self, p: int) -> None:
        """Transpose positions p and p + 1; pairs (e at u, f at v) with distinct far ends toggle."""
        u, v = self.order[p], self.order[p + 1]
        ends = self._ends
        for e in self.g.incident(u):
            eu, ev = ends[e]
            x = ev if eu == u else eu
            if x == v:
                continue
            for f in self.g.incident(v):
                fu, fv = ends[f]
                y = fv if fu == v else fu
                if y == u or y == x:
                    continue
                self.pairs ^= {_key(e, f)}
        self.order[p], self.order[p + 1] = v, u
        self.pos[u], self.pos[v] = p + 1, p


def _key(e: int, f: int) -> Pair:
    return (e, f) if e < f else (f, e)


def _components(pairs: Set[Pair]) -> Tuple[List[List[int]], Dict[int, List[int]]]:
    """Conflict-graph components, each listed in BFS order from its smallest edge."""
    adj: Dict[int, List[int]] = {}
    for e, f in sorted(pairs):
        adj.setdefault(e, []).append(f)
        adj.setdefault(f, []).append(e)
    seen: Set[int] = set()
    comps: List[List[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        i = 0
        while i < len(comp):
            for f in adj[comp[i]]:
                if f not in seen:
                    seen.add(f)
                    comp.append(f)
            i += 1
        comps.append(comp)
    return comps, adj


# ==================== Branch and Bound ====================

def _bb_crossings(
    edges: List[int], adj: Dict[int, List[int]], limit: int, budget: ExplorationBudget
) -> Optional[Tuple[int, Dict[int, int]]]:
    """Minimum same-page conflict count below `limit`, or None."""
    same = {e: [0, 0] for e in edges}
    page: Dict[int, int] = {}
    best = [limit, None]

    def rec(i: int, cost: int) -> None:
        budget.tick()
        if i == len(edges):
            if cost < best[0]:
                best[0], best[1] = cost, dict(page)
            return
        bound = cost + sum(min(same[e]) for e in edges[i:])
        if bound >= best[0]:
            return
        e = edges[i]
        choices = (0,) if i == 0 else sorted((0, 1), key=lambda p: same[e][p])
        for p in choices:
            page[e] = p
            for f in adj[e]:
                same[f][p] += 1
            rec(i + 1, cost + same[e][p])
            for f in adj[e]:
                same[f][p] -= 1
            del page[e]

    rec(0, 0)
    if best[1] is None:
        return None
    return best[0], best[1]


def _bb_crossed(
    edges: List[int], adj: Dict[int, List[int]], limit: int, budget: ExplorationBudget
) -> Optional[Tuple[int, Dict[int, int]]]:
    """Minimum number of conflict edges with a same-page neighbour below `limit`, or None."""
    same = {e: [0, 0] for e in edges}
    page: Dict[int, int] = {}
    crossed: Set[int] = set()
    best = [limit, None]

    def rec(i: int) -> None:
        budget.tick()
        if i == len(edges):
            if len(crossed) < best[0]:
                best[0], best[1] = len(crossed), dict(page)
            return
        forced = sum(1 for e in edges[i:] if same[e][0] and same[e][1])
        if len(crossed) + forced >= best[0]:
            return
        e = edges[i]
        choices = (0,) if i == 0 else sorted((0, 1), key=lambda p: same[e][p])
        for p in choices:
            newly = [f for f in adj[e] if page.get(f) == p and f not in crossed]
            if same[e][p]:
                newly.append(e)
            page[e] = p
            crossed.update(newly)
            for f in adj[e]:
                same[f][p] += 1
            rec(i + 1)
            for f in adj[e]:
                same[f][p] -= 1
            crossed.difference_update(newly)
            del page[e]

    rec(0)
    if best[1] is None:
        return None
    return best[0], best[1]


def _best_pages(
    pairs: Set[Pair], measure: Measure, limit: int, budget: ExplorationBudget
) -> Optional[Tuple[int, Dict[int, int]]]:
    """Optimal page map for the conflict edges if it beats `limit`."""
    comps, adj = _components(pairs)
    solve = _bb_crossings if measure is Measure.CROSSINGS else _bb_crossed
    total = 0
    pages: Dict[int, int] = {}
    for comp in comps:
        found = solve(comp, adj, limit - total, budget)
        if found is None:
            return None
        value, assignment = found
        total += value
        pages.update(assignment)
    return total, pages


def _flat_pages(
    pairs: Set[Pair], measure: Measure, budget: ExplorationBudget
) -> Tuple[int, Dict[int, int]]:
    """Every page assignment of the conflict edges, no bounds."""
    involved = sorted({e for pair in pairs for e in pair})
    best: Optional[Tuple[int, Dict[int, int]]] = None
    for choice in itertools.product((0, 1), repeat=len(involved)):
        budget.tick()
        page = dict(zip(involved, choice))
        hits = [(e, f) for e, f in pairs if page[e] == page[f]]
        if measure is Measure.CROSSINGS:
            value = len(hits)
        else:
            value = len({e for pair in hits for e in pair})
        if best is None or value < best[0]:
            best = (value, page)
    return best


# ==================== Search ====================

def solve_2page(
    g: Graph,
    objective: str = Measure.CROSSINGS,
    limits: Optional[SearchLimits] = None,
    prune: bool = True,
) -> SearchResult:
    """
    Exact 2-page optimum for crossings or crossed edges.

    Orders fix the smallest vertex and skip reflections as in the 1-page
    search. With pruning the best value starts at the DFS-forest baseline
    and every order only looks for strictly better page assignments.
    """
    limits = resolve_limits(limits)
    measure = Measure(objective)
    check_cap("vertices", g.n, limits.max_vertices_2page, "2-page")
    check_cap("edges", g.m, limits.max_edges_2page, "2-page")
    started = time.perf_counter()
    result_objective = Objective.of(Style.TWO_PAGE, measure)
    budget = ExplorationBudget(limits.budget)

    if g.n == 0:
        return SearchResult(result_objective, 0, BookEmbedding((), {}), 0, 0.0)

    best_value: Optional[int] = None
    best_layout: Optional[BookEmbedding] = None
    if prune:
        best_layout = baseline_2page(g)
        best_value = count(g, best_layout).value(measure)

    order = sorted(g.vertices)
    n = len(order)
    tracker = ConflictTracker(g, order)

    def evaluate() -> None:
        nonlocal best_value, best_layout
        if n >= 3 and tracker.order[1] > tracker.order[-1]:
            return
        budget.tick()
        if prune:
            found = _best_pages(tracker.pairs, measure, best_value, budget)
        else:
            found = _flat_pages(tracker.pairs, measure, budget)
        if found is None:
            return
        value, pages = found
        if best_value is None or value < best_value:
            full = {e: pages.get(e, 0) for e in g.edge_ids}
            best_value, best_layout = value, BookEmbedding(tuple(tracker.order), full)

    evaluate()
    for i in sjt_transpositions(n - 1):
        if prune and best_value == 0:
            break
        tracker.swap(i + 1)
        evaluate()

    elapsed = time.perf_counter() - started
    logger.debug(
        "2-page %s search on %d vertices / %d edges: value %d, %d nodes",
        measure.value, g.n, g.m, best_value, budget.explored,
    )
    return SearchResult(result_objective, best_value, canonicalize(best_layout), budget.explored, elapsed)
