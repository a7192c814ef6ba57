"""Tests for book embeddings and crossing evaluation."""
import random
import unittest

from core.errors import ArgumentError, ContractError
from core.graph import Graph, cyclomatic_number
from core.layout import (
    BookEmbedding,
    SwapState,
    baseline_2page,
    canonicalize,
    count,
    edges_cross,
    swap_adjacent_update,
    sweep_count,
)
from core.search.sjt import sjt_transpositions
from tests.oracle import (
    complete_graph,
    cycle_graph,
    evaluate,
    pairs_of,
    random_almost_tree,
    random_connected_graph,
    random_layout,
)


def _oracle_values(g: Graph, emb: BookEmbedding):
    pairs, index = pairs_of(g)
    pages = [0] * len(pairs)
    for e, i in index.items():
        pages[i] = emb.page[e]
    return evaluate(pairs, emb.order, pages)


class TestBookEmbedding(unittest.TestCase):

    def test_repeated_vertex_rejected(self):
        with self.assertRaises(ArgumentError):
            BookEmbedding((0, 1, 0), {})

    def test_page_out_of_range_rejected(self):
        with self.assertRaises(ArgumentError):
            BookEmbedding((0, 1), {0: 2})

    def test_validate_against_graph(self):
        g = cycle_graph(4)
        BookEmbedding.one_page(g, range(4)).validate(g)
        with self.assertRaises(ArgumentError):
            BookEmbedding((0, 1, 2), {e: 0 for e in g.edge_ids}).validate(g)
        with self.assertRaises(ArgumentError):
            BookEmbedding((0, 1, 2, 3), {0: 0}).validate(g)

    def test_document_round_trip_uses_labels(self):
        g = Graph.from_pairs([(0, 1), (1, 2), (2, 0)])
        emb = BookEmbedding((2, 0, 1), {0: 0, 1: 1, 2: 0})
        doc = emb.to_document(g, count(g, emb))
        self.assertEqual(BookEmbedding.from_document(g, doc), emb)

    def test_canonical_form_is_class_invariant(self):
        rng = random.Random(5)
        g = random_connected_graph(rng, 7, 4)
        order, pages = random_layout(rng, g)
        emb = BookEmbedding(order, pages)
        canonical = canonicalize(emb)
        for shift in range(g.n):
            rotated = BookEmbedding(order[shift:] + order[:shift], pages)
            self.assertEqual(canonicalize(rotated), canonical)
            self.assertEqual(canonicalize(rotated.complemented()), canonical)
            reflected = BookEmbedding(tuple(reversed(rotated.order)), pages)
            self.assertEqual(canonicalize(reflected), canonical)
        self.assertEqual(canonical.order[0], min(order))
        self.assertEqual(count(g, canonical).crossings, count(g, emb).crossings)


class TestCount(unittest.TestCase):

    def test_edges_cross_cases(self):
        g = Graph.from_pairs([(0, 2), (1, 3), (0, 1)])
        emb = BookEmbedding((0, 1, 2, 3), {0: 0, 1: 0, 2: 0})
        self.assertTrue(edges_cross(g, emb, 0, 1))
        self.assertFalse(edges_cross(g, emb, 0, 2))
        self.assertFalse(edges_cross(g, emb.with_pages({0: 0, 1: 1, 2: 0}), 0, 1))
        with self.assertRaises(ArgumentError):
            edges_cross(g, emb, 0, 0)

    def test_k4_convex(self):
        g = complete_graph(4)
        report = count(g, BookEmbedding.one_page(g, range(4)))
        self.assertEqual(report.crossings, 1)
        self.assertEqual(report.crossed_count, 2)
        self.assertEqual(report.value("crossed-edges"), 2)

    def test_k5_convex(self):
        g = complete_graph(5)
        report = count(g, BookEmbedding.one_page(g, range(5)))
        self.assertEqual(report.crossings, 5)
        self.assertEqual(report.crossed_count, 5)

    def test_unknown_measure(self):
        g = complete_graph(4)
        with self.assertRaises(ArgumentError):
            count(g, BookEmbedding.one_page(g, range(4))).value("area")

    def test_count_matches_independent_interleaving(self):
        rng = random.Random(17)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(4, 9), rng.randint(0, 8))
            emb = BookEmbedding(*random_layout(rng, g))
            report = count(g, emb)
            self.assertEqual((report.crossings, report.crossed_count), _oracle_values(g, emb))

    def test_sweep_matches_reference(self):
        rng = random.Random(99)
        for _ in range(60):
            g = random_connected_graph(rng, rng.randint(2, 30), rng.randint(0, 25))
            emb = BookEmbedding(*random_layout(rng, g))
            self.assertEqual(sweep_count(g, emb), count(g, emb))
            self.assertEqual(sweep_count(g, emb).per_edge, count(g, emb).per_edge)

    def test_sweep_with_parallel_edges(self):
        g = Graph.from_pairs([(0, 2), (0, 2), (1, 3), (1, 3)])
        emb = BookEmbedding.one_page(g, range(4))
        self.assertEqual(sweep_count(g, emb).crossings, 4)
        self.assertEqual(count(g, emb).crossings, 4)


class TestIncrementalSwap(unittest.TestCase):

    def test_k4_swap(self):
        g = complete_graph(4)
        emb = BookEmbedding.one_page(g, range(4))
        new_emb, report = swap_adjacent_update(g, emb, count(g, emb), 2)
        self.assertEqual(new_emb.order, (0, 1, 3, 2))
        self.assertEqual(report.crossings, 1)
        self.assertEqual(report, count(g, new_emb))

    def test_wraparound_swap(self):
        rng = random.Random(3)
        g = random_connected_graph(rng, 6, 5)
        emb = BookEmbedding(*random_layout(rng, g))
        new_emb, report = swap_adjacent_update(g, emb, count(g, emb), g.n - 1)
        self.assertEqual(new_emb.order[0], emb.order[-1])
        self.assertEqual(new_emb.order[-1], emb.order[0])
        self.assertEqual(report, count(g, new_emb))

    def test_stale_state_rejected(self):
        g = complete_graph(4)
        emb = BookEmbedding.one_page(g, range(4))
        other = emb.with_order((1, 0, 2, 3))
        with self.assertRaises(ContractError):
            swap_adjacent_update(g, emb, count(g, other), 0)

    def test_position_out_of_range(self):
        g = complete_graph(4)
        emb = BookEmbedding.one_page(g, range(4))
        with self.assertRaises(ArgumentError):
            swap_adjacent_update(g, emb, count(g, emb), 4)

    def test_full_walk_tracks_reference(self):
        rng = random.Random(41)
        for _ in range(6):
            g = random_connected_graph(rng, 6, rng.randint(2, 7))
            emb = BookEmbedding(*random_layout(rng, g))
            state = SwapState(g, emb)
            for p in sjt_transpositions(g.n):
                state.swap(p)
                reference = count(g, state.embedding())
                self.assertEqual(state.crossings, reference.crossings)
                self.assertEqual(state.crossed, reference.crossed_count)
            self.assertEqual(state.report(), count(g, state.embedding()))


class TestBaseline(unittest.TestCase):

    def test_page_zero_is_crossing_free_and_bounds_hold(self):
        rng = random.Random(8)
        for _ in range(100):
            g = random_almost_tree(rng, rng.randint(1, 6), rng.randint(0, 20), rng.randint(0, 10))
            emb = baseline_2page(g)
            emb.validate(g)
            report = sweep_count(g, emb)
            a = cyclomatic_number(g)
            self.assertLessEqual(report.crossed_count, a)
            self.assertLessEqual(report.crossings, a * (a - 1) // 2)
            self.assertTrue(all(emb.page[e] == 1 for e in report.crossed_edges))
            zero = sum(1 for p in emb.page.values() if p == 0)
            self.assertEqual(zero, g.n - 1)

    def test_forest_baseline(self):
        g = Graph.from_pairs([(0, 1), (2, 3), (3, 4)], vertices=range(6))
        emb = baseline_2page(g)
        self.assertEqual(set(emb.order), set(range(6)))
        self.assertEqual(count(g, emb).crossings, 0)
        self.assertTrue(all(p == 0 for p in emb.page.values()))


if __name__ == "__main__":
    unittest.main()
