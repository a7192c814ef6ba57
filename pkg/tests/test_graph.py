"""Tests for parsing, the multigraph container and structural decompositions."""
import random
import tempfile
import unittest
from pathlib import Path

import networkx as nx

from core.errors import ArgumentError, ParseError
from core.graph import (
    Edge,
    Graph,
    almost_tree_parameter,
    biconnected_components,
    connected_components,
    cyclomatic_number,
    maximal_degree_two_paths,
    parse_edge_list,
    read_edge_list,
    stats,
    two_core,
)
from tests.oracle import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    random_almost_tree,
    random_connected_graph,
    theta_graph,
)


class TestParse(unittest.TestCase):

    def test_skips_comments_and_blank_lines(self):
        g = parse_edge_list("# header\n\n10 20\n  20 30  \n# tail\n")
        self.assertEqual(g.n, 3)
        self.assertEqual(g.m, 2)

    def test_labels_renumbered_in_first_appearance_order(self):
        g = parse_edge_list("7 3\n3 9\n")
        self.assertEqual(g.vertices, (0, 1, 2))
        self.assertEqual(g.label(0), 7)
        self.assertEqual(g.label(2), 9)
        self.assertEqual(g.vertex_of(3), 1)

    def test_self_loops_dropped(self):
        g = parse_edge_list("1 2\n2 2\n2 3\n")
        self.assertEqual(g.m, 2)
        self.assertEqual(g.loops_dropped, 1)
        self.assertEqual([e.id for e in g.edges()], [0, 1])

    def test_parallel_edges_kept(self):
        g = parse_edge_list("1 2\n2 1\n")
        self.assertEqual(g.m, 2)
        self.assertEqual(g.degree(0), 2)

    def test_wrong_token_count_reports_line(self):
        with self.assertRaises(ParseError) as ctx:
            parse_edge_list("1 2\n# c\n1 2 3\n")
        self.assertEqual(ctx.exception.line_number, 3)

    def test_non_integer_reports_line(self):
        with self.assertRaises(ParseError) as ctx:
            parse_edge_list("a b\n")
        self.assertEqual(ctx.exception.line_number, 1)

    def test_undecodable_file_reports_line(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "bad.txt"
            path.write_bytes(b"0 1\n1 2\n2 \xff\n")
            with self.assertRaises(ParseError) as ctx:
                read_edge_list(path)
        self.assertEqual(ctx.exception.line_number, 3)

    def test_edge_list_round_trip_keeps_labels(self):
        g = parse_edge_list("5 8\n8 13\n")
        self.assertEqual(g.to_edge_list(), "5 8\n8 13\n")


class TestGraph(unittest.TestCase):

    def test_rejects_self_loop(self):
        with self.assertRaises(ArgumentError):
            Graph([0, 1], [Edge(0, 1, 1)])

    def test_rejects_unknown_endpoint(self):
        with self.assertRaises(ArgumentError):
            Graph([0, 1], [Edge(0, 0, 2)])

    def test_rejects_duplicate_edge_id(self):
        with self.assertRaises(ArgumentError):
            Graph([0, 1, 2], [Edge(0, 0, 1), Edge(0, 1, 2)])

    def test_unknown_vertex_degree(self):
        with self.assertRaises(ArgumentError):
            path_graph(3).degree(9)

    def test_edge_other(self):
        e = Edge(4, 1, 2)
        self.assertEqual(e.other(1), 2)
        with self.assertRaises(ValueError):
            e.other(3)

    def test_subgraph_with_explicit_edges(self):
        g = complete_graph(4)
        sub = g.subgraph([0, 1, 2], [0, 1])
        self.assertEqual(sub.m, 2)
        self.assertEqual(set(sub.edge_ids), {0, 1})


class TestStructure(unittest.TestCase):

    def test_cyclomatic_number(self):
        self.assertEqual(cyclomatic_number(complete_graph(4)), 3)
        self.assertEqual(cyclomatic_number(path_graph(5)), 0)
        two_triangles = Graph.from_pairs([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        self.assertEqual(cyclomatic_number(two_triangles), 2)

    def test_components_sorted_by_smallest_vertex(self):
        g = Graph.from_pairs([(3, 4), (0, 1)], vertices=range(6))
        self.assertEqual(connected_components(g), [(0, 1), (2,), (3, 4), (5,)])

    def test_two_core_of_path_is_empty(self):
        tc = two_core(path_graph(4))
        self.assertEqual(tc.core.n, 0)
        self.assertEqual(len(tc.tree_roots), 1)
        root = tc.tree_roots[0]
        self.assertEqual(tc.trees[root].size, 3)

    def test_two_core_keeps_cycle_and_records_tree(self):
        # triangle 0-1-2 with a path 2-3-4 hanging off vertex 2
        g = Graph.from_pairs([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        tc = two_core(g)
        self.assertEqual(set(tc.core.vertices), {0, 1, 2})
        self.assertEqual(tc.core.m, 3)
        tree = tc.trees[2]
        self.assertEqual(tree.vertices, (3, 4))
        self.assertEqual(tree.depth(4), 2)
        self.assertEqual(tc.tree_roots, ())

    def test_two_core_isolated_vertex_is_root(self):
        g = Graph.from_pairs([(0, 1), (1, 2), (2, 0)], vertices=range(4))
        self.assertEqual(two_core(g).tree_roots, (3,))

    def test_blocks_of_bowtie(self):
        g = Graph.from_pairs([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        forest = biconnected_components(g)
        self.assertEqual(len(forest.blocks), 2)
        self.assertEqual(forest.cut_vertices, frozenset({2}))
        self.assertEqual(almost_tree_parameter(g, forest), 1)

    def test_parallel_edges_share_a_block(self):
        g = Graph.from_pairs([(0, 1), (0, 1), (1, 2)])
        forest = biconnected_components(g)
        sizes = sorted(len(b.edges) for b in forest.blocks)
        self.assertEqual(sizes, [1, 2])
        self.assertEqual(almost_tree_parameter(g, forest), 1)

    def test_bridges_are_single_edge_blocks(self):
        forest = biconnected_components(path_graph(4))
        self.assertEqual(len(forest.blocks), 3)
        self.assertTrue(all(b.cyclomatic_number == 0 for b in forest.blocks))

    def test_blocks_partition_edges(self):
        rng = random.Random(11)
        for _ in range(20):
            g = random_connected_graph(rng, rng.randint(4, 15), rng.randint(0, 6))
            forest = biconnected_components(g)
            seen = [e for b in forest.blocks for e in b.edges]
            self.assertEqual(sorted(seen), sorted(g.edge_ids))
            self.assertEqual(sum(b.cyclomatic_number for b in forest.blocks), cyclomatic_number(g))

    def test_stats_path(self):
        s = stats(path_graph(3))
        self.assertEqual((s.n, s.m, s.a, s.k, s.n2, s.m2), (3, 2, 0, 0, 0, 0))

    def test_stats_k4(self):
        s = stats(complete_graph(4))
        self.assertEqual((s.n, s.m, s.a, s.k, s.n2, s.m2), (4, 6, 3, 3, 4, 6))
        self.assertEqual(s.to_dict()["components"], 1)

    def test_cyclomatic_number_of_connected_instances(self):
        rng = random.Random(2024)
        for n, m, a in ((38, 39, 2), (84, 90, 7), (96, 112, 17), (242, 255, 14),
                        (243, 257, 15), (4941, 6594, 1654)):
            g = random_connected_graph(rng, n, m - n + 1) if n < 1000 else _sparse_connected(rng, n, m)
            self.assertEqual((g.n, g.m), (n, m))
            self.assertEqual(stats(g).a, a)

    def test_two_core_is_idempotent(self):
        rng = random.Random(12)
        for _ in range(20):
            g = random_almost_tree(rng, rng.randint(1, 5), rng.randint(0, 15), rng.randint(0, 10))
            core = two_core(g).core
            again = two_core(core)
            self.assertEqual(set(again.core.vertices), set(core.vertices))
            self.assertEqual(set(again.core.edge_ids), set(core.edge_ids))
            self.assertEqual(again.trees, {})
            self.assertTrue(all(core.degree(v) >= 2 for v in core.vertices))

    def test_min_degree_three_bounds_size(self):
        rng = random.Random(13)
        graphs = [_cubic(rng, 2 * rng.randint(2, 20)) for _ in range(20)]
        graphs += [_min_degree_three(rng, rng.randint(4, 30)) for _ in range(30)]
        for g in graphs:
            k = cyclomatic_number(g)
            self.assertLessEqual(g.n, 2 * k - 2)
            self.assertLessEqual(g.m, 3 * k - 3)

    def test_cubic_graphs_meet_the_bound(self):
        rng = random.Random(14)
        graphs = [complete_graph(4), complete_bipartite(3, 3),
                  Graph.from_pairs(nx.petersen_graph().edges(), vertices=range(10))]
        graphs += [_cubic(rng, 2 * rng.randint(3, 25)) for _ in range(10)]
        for g in graphs:
            self.assertEqual(g.n, 2 * cyclomatic_number(g) - 2)

    def test_stats_identity_on_multigraphs(self):
        rng = random.Random(15)
        for _ in range(100):
            n = rng.randint(1, 25)
            pairs = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(0, 2 * n))] if n > 1 else []
            if pairs and rng.random() < 0.5:
                pairs.append(rng.choice(pairs))
            g = Graph.from_pairs(pairs, vertices=range(n))
            s = stats(g)
            self.assertEqual(s.a, g.m - g.n + len(connected_components(g)))
            self.assertEqual(s.components, len(connected_components(g)))
            self.assertLessEqual(s.k, s.a)


def _sparse_connected(rng: random.Random, n: int, m: int) -> Graph:
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    present = {tuple(sorted(p)) for p in pairs}
    while len(pairs) < m:
        u, v = sorted(rng.sample(range(n), 2))
        if (u, v) not in present:
            present.add((u, v))
            pairs.append((u, v))
    return Graph.from_pairs(pairs, vertices=range(n))


def _cubic(rng: random.Random, n: int) -> Graph:
    """Connected random 3-regular graph on n vertices."""
    while True:
        G = nx.random_regular_graph(3, n, seed=rng.randrange(2 ** 31))
        if nx.is_connected(G):
            return Graph.from_pairs(G.edges(), vertices=range(n))


def _min_degree_three(rng: random.Random, n: int) -> Graph:
    """Connected multigraph with every degree at least 3."""
    pairs = [(rng.randrange(v), v) for v in range(1, n)]
    degree = [0] * n
    for u, v in pairs:
        degree[u] += 1
        degree[v] += 1
    for v in range(n):
        while degree[v] < 3:
            w = rng.choice([x for x in range(n) if x != v])
            pairs.append((v, w))
            degree[v] += 1
            degree[w] += 1
    return Graph.from_pairs(pairs, vertices=range(n))


class TestDegreeTwoPaths(unittest.TestCase):

    def test_cycle_is_one_closed_path(self):
        (path,) = maximal_degree_two_paths(cycle_graph(5))
        self.assertTrue(path.cyclic)
        self.assertTrue(path.closed)
        self.assertEqual(path.length, 5)
        self.assertEqual(path.endpoints, (0, 0))

    def test_theta_arms(self):
        paths = maximal_degree_two_paths(theta_graph(2, 3, 4))
        self.assertEqual(sorted(p.length for p in paths), [2, 3, 4])
        self.assertTrue(all(set(p.endpoints) == {0, 1} for p in paths))

    def test_k4_has_single_edge_paths(self):
        paths = maximal_degree_two_paths(complete_graph(4))
        self.assertEqual(len(paths), 6)
        self.assertTrue(all(p.length == 1 and not p.interior for p in paths))

    def test_paths_partition_edges(self):
        g = theta_graph(5, 1, 3)
        paths = maximal_degree_two_paths(g)
        self.assertEqual(sorted(e for p in paths for e in p.edges), sorted(g.edge_ids))

    def test_path_count_bounded_by_cyclomatic_number(self):
        rng = random.Random(16)
        checked = 0
        for _ in range(50):
            g = random_almost_tree(rng, rng.randint(2, 6), rng.randint(0, 30), rng.randint(0, 10))
            core = two_core(g).core
            if not any(core.degree(v) >= 3 for v in core.vertices):
                continue
            checked += 1
            self.assertLessEqual(len(maximal_degree_two_paths(core)), 3 * cyclomatic_number(core) - 3)
        self.assertGreater(checked, 0)


if __name__ == "__main__":
    unittest.main()
