"""Structural decompositions: components, 2-core, blocks, almost-tree parameter."""
from collections import deque
from dataclasses import dataclass, field, asdict
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from .graph import Graph


@dataclass(frozen=True)
class PrunedTree:
    """
    A tree hanging off one vertex.

    `vertices` is the DFS preorder (children by id) without the attachment,
    `parent` maps every listed vertex to its parent, `edges` are the tree
    edge ids.
    """

    attachment: int
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]
    parent: Dict[int, int] = field(compare=False)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def depth(self, v: int) -> int:
        d = 0
        while v != self.attachment:
            v = self.parent[v]
            d += 1
        return d


@dataclass(frozen=True)
class TwoCore:
    """Result of 2-core peeling."""

    core: Graph
    trees: Dict[int, PrunedTree]
    # Roots of components that peel away entirely (including isolated vertices)
    tree_roots: Tuple[int, ...]


@dataclass(frozen=True)
class Block:
    index: int
    edges: Tuple[int, ...]
    vertices: Tuple[int, ...]

    @property
    def cyclomatic_number(self) -> int:
        return len(self.edges) - len(self.vertices) + 1


@dataclass(frozen=True)
class BlockCutForest:
    """Biconnected components and the cut vertices joining them."""

    blocks: Tuple[Block, ...]
    cut_vertices: frozenset
    # cut vertex -> indices of blocks containing it
    incidence: Dict[int, Tuple[int, ...]]


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    a: int
    k: int
    n2: int
    m2: int
    components: int

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary for JSON export."""
        return asdict(self)


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by smallest vertex."""
    comps = [tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())]
    comps.sort(key=lambda c: c[0])
    return comps


def cyclomatic_number(g: Graph) -> int:
    """m - n + number of connected components."""
    return g.m - g.n + nx.number_connected_components(g.to_networkx())


def two_core(g: Graph) -> TwoCore:
    """
    Peel degree <= 1 vertices with a queue until every survivor has degree >= 2.

    Linear in n + m. Each peeled vertex remembers the vertex it was peeled
    towards, which gives the pruned trees.
    """
    deg = {v: g.degree(v) for v in g.vertices}
    removed_vertex: Dict[int, bool] = {}
    removed_edge: Dict[int, bool] = {}
    parent: Dict[int, Tuple[int, int]] = {}
    roots: List[int] = []

    queue = deque(v for v in g.vertices if deg[v] <= 1)
    while queue:
        v = queue.popleft()
        if v in removed_vertex:
            continue
        removed_vertex[v] = True
        live = [e for e in g.incident(v) if e not in removed_edge]
        if not live:
            roots.append(v)
            continue
        (e,) = live
        removed_edge[e] = True
        w = g.edge(e).other(v)
        parent[v] = (w, e)
        deg[w] -= 1
        if deg[w] <= 1 and w not in removed_vertex:
            queue.append(w)

    core_vertices = [v for v in g.vertices if v not in removed_vertex]
    core_edges = [e for e in g.edge_ids if e not in removed_edge]
    core = g.subgraph(core_vertices, core_edges)

    children: Dict[int, List[int]] = {}
    for v, (w, _) in parent.items():
        children.setdefault(w, []).append(v)

    trees: Dict[int, PrunedTree] = {}
    tree_roots = sorted(roots)
    anchors = [v for v in core_vertices if v in children] + tree_roots
    for anchor in anchors:
        order: List[int] = []
        tree_edges: List[int] = []
        tree_parent: Dict[int, int] = {}
        stack = list(reversed(sorted(children.get(anchor, []))))
        while stack:
            v = stack.pop()
            w, e = parent[v]
            order.append(v)
            tree_edges.append(e)
            tree_parent[v] = w
            stack.extend(reversed(sorted(children.get(v, []))))
        trees[anchor] = PrunedTree(anchor, tuple(order), tuple(tree_edges), tree_parent)

    return TwoCore(core=core, trees=trees, tree_roots=tuple(tree_roots))


def biconnected_components(g: Graph) -> BlockCutForest:
    """
    Iterative Hopcroft-Tarjan over edge ids.

    Skipping the tree edge by id (not by parent vertex) makes parallel
    edges land in a common block. Bridges become single-edge blocks;
    isolated vertices belong to no block.
    """
    disc: Dict[int, int] = {}
    low: Dict[int, int] = {}
    raw_blocks: List[List[int]] = []
    clock = 0

    for root in g.vertices:
        if root in disc or g.degree(root) == 0:
            continue
        disc[root] = low[root] = clock
        clock += 1
        edge_stack: List[int] = []
        stack: List[Tuple[int, Optional[int], Any]] = [(root, None, iter(g.incident(root)))]

        while stack:
            v, via, it = stack[-1]
            descended = False
            for e in it:
                if e == via:
                    continue
                w = g.edge(e).other(v)
                if w not in disc:
                    edge_stack.append(e)
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, e, iter(g.incident(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue

            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                block: List[int] = []
                while True:
                    e = edge_stack.pop()
                    block.append(e)
                    if e == via:
                        break
                raw_blocks.append(block)

    blocks: List[Block] = []
    membership: Dict[int, List[int]] = {}
    for index, edge_ids in enumerate(raw_blocks):
        verts = set()
        for e in edge_ids:
            edge = g.edge(e)
            verts.add(edge.u)
            verts.add(edge.v)
        for v in verts:
            membership.setdefault(v, []).append(index)
        blocks.append(Block(index, tuple(sorted(edge_ids)), tuple(sorted(verts))))

    incidence = {v: tuple(bs) for v, bs in membership.items() if len(bs) > 1}
    return BlockCutForest(tuple(blocks), frozenset(incidence), incidence)


def almost_tree_parameter(g: Graph, forest: Optional[BlockCutForest] = None) -> int:
    """Largest cyclomatic number over the blocks; 0 for forests."""
    forest = forest or biconnected_components(g)
    return max((b.cyclomatic_number for b in forest.blocks), default=0)


def stats(g: Graph) -> GraphStats:
    """Size, cyclomatic and 2-core statistics plus the component count."""
    components = nx.number_connected_components(g.to_networkx())
    tc = two_core(g)
    return GraphStats(
        n=g.n,
        m=g.m,
        a=g.m - g.n + components,
        k=almost_tree_parameter(g),
        n2=tc.core.n,
        m2=tc.core.m,
        components=components,
    )
