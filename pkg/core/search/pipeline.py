"""Block-by-block solving: decompose, kernelize, search, lift, compose."""
import logging
import time
from typing import Callable, Dict, List, Optional, Tuple

from core.errors import ArgumentError, BudgetExceededError, InvariantError, SearchSizeError
from core.graph import Block, BlockCutForest, Graph, biconnected_components, connected_components
from core.kernel import Kernel, kernel_1page, kernel_2page_crossed, kernel_2page_crossings, lift_layout
from core.layout import BookEmbedding, canonicalize, sweep_count
from core.settings import SearchLimits
from .matmult import solve_1page_matmult, solve_2page_matmult
from .result import BlockSummary, Measure, Objective, SearchResult, Style, resolve_limits
from .sjt import solve_1page_sjt
from .two_page import solve_2page

logger = logging.getLogger(__name__)

ENGINE_STYLES = {
    "sjt": Style.ONE_PAGE,
    "enumeration": Style.TWO_PAGE,
}


def kernel_for(objective: Objective) -> Callable[[Graph], Kernel]:
    """Kernel builder matching an objective."""
    if objective.style is Style.ONE_PAGE:
        return kernel_1page
    if objective.measure is Measure.CROSSINGS:
        return kernel_2page_crossings
    return kernel_2page_crossed


def resolve_engine(engine: str, objective: Objective) -> str:
    """Concrete engine name; 'auto' picks SJT (1-page) or enumeration (2-page)."""
    if engine == "auto":
        return "sjt" if objective.style is Style.ONE_PAGE else "enumeration"
    if engine == "matmult":
        if objective.measure is not Measure.CROSSINGS:
            raise ArgumentError("The matmult engine only minimizes crossings")
        return engine
    if engine not in ENGINE_STYLES:
        raise ArgumentError(f"Unknown engine {engine!r}")
    if ENGINE_STYLES[engine] is not objective.style:
        raise ArgumentError(f"Engine {engine} does not solve {objective.style.value} layouts")
    return engine


def _run_engine(engine: str, objective: Objective, g: Graph, limits: SearchLimits) -> SearchResult:
    measure = objective.measure
    if engine == "sjt":
        return solve_1page_sjt(g, measure, limits)
    if engine == "enumeration":
        return solve_2page(g, measure, limits)
    if objective.style is Style.ONE_PAGE:
        return solve_1page_matmult(g, limits)
    return solve_2page_matmult(g, measure, limits)


# ==================== Blocks ====================

def _cycle_layout(g: Graph, block: Block) -> BookEmbedding:
    """Walk a bridge or a cycle block from its smallest vertex; all edges on page 0."""
    start = block.vertices[0]
    order = [start]
    remaining = set(block.edges)
    v = start
    while remaining:
        e = next(e for e in g.incident(v) if e in remaining)
        remaining.discard(e)
        v = g.edge(e).other(v)
        if v != start:
            order.append(v)
    return BookEmbedding(tuple(order), {e: 0 for e in block.edges})


def _solve_block(
    g: Graph, block: Block, objective: Objective, engine: str, limits: SearchLimits
) -> Tuple[BookEmbedding, int, int, BlockSummary]:
    if block.cyclomatic_number <= 1:
        layout = _cycle_layout(g, block)
        summary = BlockSummary(block.index, len(block.vertices), len(block.edges),
                               len(block.vertices), len(block.edges), 0, "trivial")
        return layout, 0, 0, summary

    sub = g.subgraph(block.vertices, block.edges)
    kernel = kernel_for(objective)(sub)
    try:
        result = _run_engine(engine, objective, kernel.graph, limits)
    except SearchSizeError as e:
        raise type(e)(
            f"kernel has {kernel.graph.n} vertices and {kernel.graph.m} edges; {e}",
            size=e.size, limit=e.limit, block=block.index,
        ) from e
    layout = lift_layout(kernel, result.layout)
    summary = BlockSummary(block.index, sub.n, sub.m, kernel.graph.n, kernel.graph.m, result.value, engine)
    logger.info(
        "block %d: %d vertices -> kernel %d, value %d (%d explored)",
        block.index, sub.n, kernel.graph.n, result.value, result.explored,
    )
    return layout, result.value, result.explored, summary


def compose_components(g: Graph, forest: BlockCutForest, per_block: Dict[int, BookEmbedding]) -> BookEmbedding:
    """
    Join block layouts into one layout of g without inter-block crossings.

    Blocks are visited depth-first over the block-cut tree. A child block is
    laid out as a contiguous interval right after the cut vertex it shares
    with its parent, rotated to start there. Isolated vertices and other
    connected components follow one another.
    """
    blocks_at: Dict[int, List[int]] = {}
    for block in forest.blocks:
        if block.index not in per_block:
            raise ArgumentError(f"No layout for block {block.index}")
        for v in block.vertices:
            blocks_at.setdefault(v, []).append(block.index)

    def rotated(index: int, v: int) -> Tuple[int, ...]:
        order = per_block[index].order
        i = order.index(v)
        return order[i:] + order[:i]

    order: List[int] = []
    page: Dict[int, int] = {}
    for layout in per_block.values():
        page.update(layout.page)
    done = set()

    for comp in connected_components(g):
        stack = [iter([(comp[0], None)])]
        while stack:
            item = next(stack[-1], None)
            if item is None:
                stack.pop()
                continue
            v, parent = item
            order.append(v)
            children = [b for b in blocks_at.get(v, ()) if b != parent and b not in done]
            if children:
                done.update(children)
                stack.append(iter([(w, b) for b in children for w in rotated(b, v)[1:]]))

    return BookEmbedding(tuple(order), page)


# ==================== Pipeline ====================

def _remaining(limits: SearchLimits, explored: int) -> SearchLimits:
    """Limits for the next block; the budget covers the whole run."""
    if limits.budget is None:
        return limits
    left = limits.budget - explored
    if left <= 0:
        raise BudgetExceededError(
            f"explored {explored} configurations, budget is {limits.budget}",
            size=explored, limit=limits.budget,
        )
    return limits.model_copy(update={"budget": left})


def solve(
    g: Graph,
    style: str = Style.ONE_PAGE,
    objective: str = Measure.CROSSINGS,
    engine: str = "auto",
    limits: Optional[SearchLimits] = None,
) -> SearchResult:
    """
    Exact optimum of g: blocks are kernelized and searched independently.

    The block values add up; the composed layout is recounted and must
    reproduce the sum.
    """
    limits = resolve_limits(limits)
    target = Objective.of(style, objective)
    engine = resolve_engine(engine, target)
    started = time.perf_counter()

    forest = biconnected_components(g)
    per_block: Dict[int, BookEmbedding] = {}
    summaries: List[BlockSummary] = []
    total = 0
    explored = 0
    for block in forest.blocks:
        block_limits = limits if block.cyclomatic_number <= 1 else _remaining(limits, explored)
        layout, value, seen, summary = _solve_block(g, block, target, engine, block_limits)
        per_block[block.index] = layout
        summaries.append(summary)
        total += value
        explored += seen

    layout = compose_components(g, forest, per_block)
    report = sweep_count(g, layout)
    if report.value(target.measure) != total:
        raise InvariantError(
            f"Composed layout has {report.value(target.measure)} {target.measure.value}, blocks sum to {total}"
        )
    elapsed = time.perf_counter() - started
    logger.info("%s = %d over %d blocks in %.3fs", target.value, total, len(forest.blocks), elapsed)
    return SearchResult(target, total, canonicalize(layout), explored, elapsed, tuple(summaries))
