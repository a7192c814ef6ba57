"""Exact search engines and the block pipeline."""
from .result import BlockSummary, ExplorationBudget, Measure, Objective, SearchResult, Style
from .sjt import sjt_transpositions, solve_1page_sjt
from .two_page import ConflictTracker, solve_2page
from .matmult import (
    INF,
    OrderedBlock,
    Slot,
    enumerate_blocks,
    min_plus_product,
    pair_weight,
    solve_1page_matmult,
    solve_2page_matmult,
)
from .pipeline import compose_components, kernel_for, resolve_engine, solve

__all__ = [
    "BlockSummary", "ExplorationBudget", "Measure", "Objective", "SearchResult", "Style",
    "sjt_transpositions", "solve_1page_sjt", "ConflictTracker", "solve_2page",
    "INF", "OrderedBlock", "Slot", "enumerate_blocks", "min_plus_product", "pair_weight",
    "solve_1page_matmult", "solve_2page_matmult",
    "compose_components", "kernel_for", "resolve_engine", "solve",
]
