"""1-page exact search over circular orders by adjacent transpositions."""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Tuple

from core.graph import Graph
from core.layout import BookEmbedding, SwapState, canonicalize
from core.settings import SearchLimits
from .result import ExplorationBudget, Measure, Objective, SearchResult, Style, check_cap, resolve_limits

logger = logging.getLogger(__name__)


def sjt_transpositions(k: int) -> Iterator[int]:
    """
    Left index of each adjacent transposition in a Steinhaus-Johnson-Trotter walk.

    Starting from any arrangement of k items, applying the yielded swaps in
    turn visits all k! arrangements exactly once (k! - 1 swaps).
    """
    if k < 2:
        return
    perm = list(range(k))
    where = list(range(k))
    # -1 points left, +1 right
    direction = [-1] * k
    while True:
        mobile = -1
        for x in range(k - 1, -1, -1):
            j = where[x] + direction[x]
            if 0 <= j < k and perm[j] < x:
                mobile = x
                break
        if mobile < 0:
            return
        i = where[mobile]
        j = i + direction[mobile]
        other = perm[j]
        perm[i], perm[j] = other, mobile
        where[mobile], where[other] = j, i
        yield min(i, j)
        for x in range(mobile + 1, k):
            direction[x] = -direction[x]


def _walk(
    g: Graph, measure: str, fixed: List[int], free: List[int], budget: ExplorationBudget
) -> Tuple[Optional[int], Optional[Tuple[int, ...]]]:
    """Best order among fixed + (every arrangement of free) with order[1] < order[-1]."""
    order = fixed + free
    n = len(order)
    state = SwapState(g, BookEmbedding.one_page(g, order))
    best: Optional[int] = None
    best_order: Optional[Tuple[int, ...]] = None

    def consider() -> None:
        nonlocal best, best_order
        if n >= 3 and state.order[1] > state.order[-1]:
            return
        budget.tick()
        value = state.value(measure)
        if best is None or value < best:
            best, best_order = value, tuple(state.order)

    consider()
    offset = len(fixed)
    for i in sjt_transpositions(len(free)):
        if best == 0:
            break
        state.swap(offset + i)
        consider()
    return best, best_order


def _search_partition(g: Graph, measure: str, fixed: List[int], free: List[int], limit: Optional[int]):
    budget = ExplorationBudget(limit)
    best, best_order = _walk(g, measure, fixed, free, budget)
    return best, best_order, budget.explored


def _partitions(anchor: int, rest: List[int]) -> List[Tuple[List[int], List[int]]]:
    """Split orders by the vertex after the anchor; splits that only hold reflections are skipped."""
    return [
        ([anchor, s], [v for v in rest if v != s])
        for s in rest
        if s < max(v for v in rest if v != s)
    ]


def solve_1page_sjt(
    g: Graph,
    objective: str = Measure.CROSSINGS,
    limits: Optional[SearchLimits] = None,
) -> SearchResult:
    """
    Exact 1-page optimum for crossings or crossed edges.

    The smallest vertex stays at position 0 and reflections are skipped by
    keeping order[1] < order[-1]. Each transposition updates the crossing
    state in O(deg(u) * deg(v)).

    From 4 vertices on, orders are split by their second vertex and every
    split is searched, serially or in worker processes. The reported layout
    is the canonical minimum over the best layout of each split, so it does
    not depend on the thread count.
    """
    limits = resolve_limits(limits)
    measure = Measure(objective)
    check_cap("vertices", g.n, limits.max_vertices_1page, "1-page")
    started = time.perf_counter()
    result_objective = Objective.of(Style.ONE_PAGE, measure)

    if g.n == 0:
        return SearchResult(result_objective, 0, BookEmbedding((), {}), 0, 0.0)

    vertices = sorted(g.vertices)
    anchor, rest = vertices[0], vertices[1:]

    if g.n < 4:
        budget = ExplorationBudget(limits.budget)
        value, best_order = _walk(g, measure.value, [anchor], rest, budget)
        explored = budget.explored
        layout = canonicalize(BookEmbedding.one_page(g, best_order))
    else:
        partitions = _partitions(anchor, rest)
        if limits.threads > 1:
            with ProcessPoolExecutor(max_workers=limits.threads) as pool:
                futures = [
                    pool.submit(_search_partition, g, measure.value, fixed, free, limits.budget)
                    for fixed, free in partitions
                ]
                outcomes = [future.result() for future in futures]
            explored = sum(seen for _, _, seen in outcomes)
            ExplorationBudget(limits.budget).tick(explored)
        else:
            budget = ExplorationBudget(limits.budget)
            outcomes = [
                _walk(g, measure.value, fixed, free, budget) + (None,)
                for fixed, free in partitions
            ]
            explored = budget.explored

        candidates = [
            (best, canonicalize(BookEmbedding.one_page(g, best_order)))
            for best, best_order, _ in outcomes
            if best is not None
        ]
        value, layout = min(candidates, key=lambda c: (c[0], c[1].order, c[1].page_vector()))

    elapsed = time.perf_counter() - started
    logger.debug("1-page %s search on %d vertices: value %d, %d orders", measure.value, g.n, value, explored)
    return SearchResult(result_objective, value, layout, explored, elapsed)
