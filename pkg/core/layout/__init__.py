"""Book embeddings, crossing evaluation and spine reductions."""
from .embedding import BookEmbedding, LayoutDocument, baseline_2page, canonicalize
from .crossings import CrossingReport, SwapState, count, edges_cross, swap_adjacent_update, sweep_count
from .reductions import PairType, classify_pair, reduce_exhaustively, reduce_m_rainbow, reduce_s_spiral

__all__ = [
    "BookEmbedding", "LayoutDocument", "baseline_2page", "canonicalize",
    "CrossingReport", "SwapState", "count", "edges_cross", "swap_adjacent_update", "sweep_count",
    "PairType", "classify_pair", "reduce_exhaustively", "reduce_m_rainbow", "reduce_s_spiral",
]
