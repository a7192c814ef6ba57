"""Tests for the crossing-preserving spine reductions."""
import random
import unittest

from core.errors import ArgumentError
from core.graph import Graph, cyclomatic_number, maximal_degree_two_paths
from core.layout import (
    BookEmbedding,
    PairType,
    baseline_2page,
    classify_pair,
    count,
    reduce_exhaustively,
    reduce_m_rainbow,
    reduce_s_spiral,
)
from tests.oracle import complete_graph, cycle_graph, random_almost_tree, random_layout, slow_tests_enabled


def _alternating_cycle(n: int):
    g = cycle_graph(n)
    return g, BookEmbedding(tuple(range(n)), {e: e % 2 for e in g.edge_ids})


class TestClassify(unittest.TestCase):

    def setUp(self):
        # path 0-1-2 plus an isolated anchor 3
        self.g = Graph.from_pairs([(0, 1), (1, 2)], vertices=range(4))

    def test_m_and_rainbow(self):
        same = {0: 0, 1: 0}
        self.assertIs(classify_pair(self.g, BookEmbedding((3, 0, 1, 2), same), 0, 1), PairType.M)
        self.assertIs(classify_pair(self.g, BookEmbedding((3, 0, 2, 1), same), 0, 1), PairType.RAINBOW)

    def test_s_and_spiral(self):
        split = {0: 0, 1: 1}
        self.assertIs(classify_pair(self.g, BookEmbedding((3, 0, 1, 2), split), 0, 1), PairType.S)
        self.assertIs(classify_pair(self.g, BookEmbedding((3, 1, 0, 2), split), 0, 1), PairType.SPIRAL)

    def test_explicit_anchor_changes_the_line(self):
        emb = BookEmbedding((3, 0, 1, 2), {0: 0, 1: 0})
        self.assertIs(classify_pair(self.g, emb, 0, 1, anchor=1), PairType.RAINBOW)

    def test_non_adjacent_edges_rejected(self):
        g = Graph.from_pairs([(0, 1), (2, 3)])
        with self.assertRaises(ArgumentError):
            classify_pair(g, BookEmbedding((0, 1, 2, 3), {0: 0, 1: 0}), 0, 1)


class TestSingleReductions(unittest.TestCase):

    def test_m_on_one_page_cycle(self):
        g = cycle_graph(6)
        reduced, emb = reduce_m_rainbow(g, BookEmbedding.one_page(g, range(6)), 0, 1)
        self.assertEqual(reduced.n, 5)
        self.assertEqual(emb.order, (0, 2, 3, 4, 5))
        self.assertEqual(set(reduced.edge(0).endpoints), {0, 2})
        self.assertEqual(count(reduced, emb).crossings, 0)

    def test_m_rejects_different_pages(self):
        g, emb = _alternating_cycle(6)
        with self.assertRaises(ArgumentError):
            reduce_m_rainbow(g, emb, 0, 1)

    def test_m_rejects_crossed_edge(self):
        # 0-1-2-3 path whose middle edge is crossed by chord 4-5
        g = Graph.from_pairs([(0, 1), (1, 2), (2, 3), (4, 5), (3, 4), (5, 0)])
        emb = BookEmbedding.one_page(g, (0, 1, 4, 2, 5, 3))
        self.assertGreater(count(g, emb).per_edge[1], 0)
        with self.assertRaises(ArgumentError):
            reduce_m_rainbow(g, emb, 0, 1)

    def test_s_on_alternating_cycle(self):
        g, emb = _alternating_cycle(6)
        self.assertIs(classify_pair(g, emb, 0, 1), PairType.S)
        reduced, new_emb = reduce_s_spiral(g, emb, 0, 1)
        self.assertEqual(reduced.n, 5)
        self.assertNotIn(1, new_emb.order)
        self.assertEqual(count(reduced, new_emb).crossings, 0)

    def test_s_rejects_same_page(self):
        g = cycle_graph(6)
        with self.assertRaises(ArgumentError):
            reduce_s_spiral(g, BookEmbedding.one_page(g, range(6)), 0, 1)

    def _check_random_reductions(self, seed: int, layouts: int):
        rng = random.Random(seed)
        applied = 0
        for _ in range(layouts):
            g = random_almost_tree(rng, rng.randint(1, 4), rng.randint(4, 14), rng.randint(0, 3))
            emb = BookEmbedding(*random_layout(rng, g))
            before = count(g, emb)
            for v in g.vertices:
                if g.degree(v) != 2:
                    continue
                e1, e2 = g.incident(v)
                for reduce in (reduce_m_rainbow, reduce_s_spiral):
                    for ab, bc in ((e1, e2), (e2, e1)):
                        try:
                            reduced, new_emb = reduce(g, emb, ab, bc)
                        except ArgumentError:
                            continue
                        applied += 1
                        after = count(reduced, new_emb)
                        self.assertEqual(reduced.n, g.n - 1)
                        self.assertEqual(reduced.m, g.m - 1)
                        self.assertEqual(after.crossings, before.crossings)
                        self.assertEqual(after.crossed_count, before.crossed_count)
        self.assertGreater(applied, 0)

    def test_random_reductions_preserve_counts(self):
        self._check_random_reductions(seed=31, layouts=300)

    @unittest.skipUnless(slow_tests_enabled(), "slow tier")
    def test_many_random_reductions_preserve_counts(self):
        self._check_random_reductions(seed=32, layouts=1000)


class TestExhaustive(unittest.TestCase):

    def test_one_page_cycle_collapses(self):
        g = cycle_graph(12)
        reduced, emb = reduce_exhaustively(g, BookEmbedding.one_page(g, range(12)))
        self.assertEqual(reduced.n, 3)
        self.assertEqual(count(reduced, emb).crossings, 0)

    def test_fixpoint_without_degree_two_vertices(self):
        g = complete_graph(5)
        emb = BookEmbedding.one_page(g, range(5))
        reduced, out = reduce_exhaustively(g, emb)
        self.assertIs(reduced, g)
        self.assertEqual(out, emb)

    def test_baseline_paths_shrink_below_bound(self):
        rng = random.Random(77)
        for _ in range(40):
            g = random_almost_tree(rng, rng.randint(1, 4), rng.randint(10, 60), 0)
            emb = baseline_2page(g)
            before = count(g, emb)
            reduced, out = reduce_exhaustively(g, emb)
            after = count(reduced, out)
            self.assertEqual(after.crossings, before.crossings)
            self.assertEqual(after.crossed_count, before.crossed_count)
            k = cyclomatic_number(g)
            for path in maximal_degree_two_paths(reduced):
                self.assertLess(path.length, 2 * k + 4)


if __name__ == "__main__":
    unittest.main()
