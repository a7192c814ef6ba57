"""Graph container for undirected multigraphs with stable ids."""
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import ArgumentError
from .edge import Edge


class Graph:
    """
    Immutable undirected multigraph.

    Vertices are integer ids, edges carry their own integer ids so that
    parallel edges stay distinguishable. Self-loops are rejected; the
    parser strips them before construction. A label map keeps the
    original input labels for output.
    """

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[Edge],
        labels: Optional[Dict[int, int]] = None,
        loops_dropped: int = 0,
    ):
        self._vertices: Tuple[int, ...] = tuple(vertices)
        self._edges: Dict[int, Edge] = {}
        self._adjacency: Dict[int, List[int]] = {v: [] for v in self._vertices}
        if len(self._adjacency) != len(self._vertices):
            raise ArgumentError("Duplicate vertex ids")

        for edge in edges:
            if edge.id in self._edges:
                raise ArgumentError(f"Duplicate edge id {edge.id}")
            if edge.u == edge.v:
                raise ArgumentError(f"Edge {edge.id} is a self-loop")
            if edge.u not in self._adjacency or edge.v not in self._adjacency:
                raise ArgumentError(f"Edge {edge.id} references an unknown vertex")
            self._edges[edge.id] = edge
            self._adjacency[edge.u].append(edge.id)
            self._adjacency[edge.v].append(edge.id)

        self._incident: Dict[int, Tuple[int, ...]] = {
            v: tuple(ids) for v, ids in self._adjacency.items()
        }
        self._labels: Dict[int, int] = dict(labels) if labels else {}
        self._index: Optional[Dict[int, int]] = None
        self.loops_dropped = loops_dropped
        self._nx: Optional[nx.MultiGraph] = None

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]], vertices: Optional[Iterable[int]] = None) -> 'Graph':
        """Build a graph from endpoint pairs; edge ids follow the pair order."""
        pairs = list(pairs)
        if vertices is None:
            seen: Dict[int, None] = {}
            for u, v in pairs:
                seen.setdefault(u)
                seen.setdefault(v)
            vertices = sorted(seen)
        return cls(vertices, [Edge(i, u, v) for i, (u, v) in enumerate(pairs)])

    # ==================== Vertex Operations ====================

    @property
    def vertices(self) -> Tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        """Get the number of vertices."""
        return len(self._vertices)

    def has_vertex(self, v: int) -> bool:
        return v in self._incident

    def degree(self, v: int) -> int:
        """Number of incident edges, parallel edges counted separately."""
        try:
            return len(self._incident[v])
        except KeyError:
            raise ArgumentError(f"Unknown vertex {v}") from None

    def incident(self, v: int) -> Tuple[int, ...]:
        """Ids of the edges incident to v."""
        try:
            return self._incident[v]
        except KeyError:
            raise ArgumentError(f"Unknown vertex {v}") from None

    # ==================== Edge Operations ====================

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(self._edges)

    @property
    def m(self) -> int:
        """Get the number of edges."""
        return len(self._edges)

    def edges(self) -> Iterator[Edge]:
        """Iterate over all edges in id insertion order."""
        return iter(self._edges.values())

    def edge(self, edge_id: int) -> Edge:
        """Get an edge by id."""
        try:
            return self._edges[edge_id]
        except KeyError:
            raise ArgumentError(f"Unknown edge id {edge_id}") from None

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._edges

    # ==================== Labels ====================

    def label(self, v: int) -> int:
        """Original input label of a vertex."""
        return self._labels.get(v, v)

    def vertex_of(self, label: int) -> int:
        """Internal id of an original input label."""
        if not self._labels:
            if label not in self._incident:
                raise ArgumentError(f"Unknown vertex label {label}")
            return label
        if self._index is None:
            self._index = {lab: v for v, lab in self._labels.items()}
        try:
            return self._index[label]
        except KeyError:
            raise ArgumentError(f"Unknown vertex label {label}") from None

    # ==================== Graph Operations ====================

    def subgraph(self, vertices: Iterable[int], edge_ids: Optional[Iterable[int]] = None) -> 'Graph':
        """Induced subgraph on the vertices, or exactly the given edges when provided."""
        keep = [v for v in vertices]
        keep_set = set(keep)
        if edge_ids is None:
            chosen = [e for e in self._edges.values() if e.u in keep_set and e.v in keep_set]
        else:
            chosen = [self.edge(e) for e in edge_ids]
        return Graph(keep, chosen, labels={v: self.label(v) for v in keep} if self._labels else None)

    def with_edges(self, edges: Sequence[Edge], vertices: Optional[Iterable[int]] = None) -> 'Graph':
        """New graph over the given vertices (default: these) with replacement edges."""
        keep = list(self._vertices if vertices is None else vertices)
        return Graph(keep, edges, labels={v: self.label(v) for v in keep} if self._labels else None)

    def to_networkx(self) -> nx.MultiGraph:
        """MultiGraph view keyed by edge id; built once and cached."""
        if self._nx is None:
            g = nx.MultiGraph()
            g.add_nodes_from(self._vertices)
            for e in self._edges.values():
                g.add_edge(e.u, e.v, key=e.id)
            self._nx = g
        return self._nx

    def to_edge_list(self) -> str:
        """Edge-list text with original labels."""
        return "".join(f"{self.label(e.u)} {self.label(e.v)}\n" for e in self._edges.values())

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to dictionary for JSON export."""
        return {
            "vertices": [self.label(v) for v in self._vertices],
            "edges": [[e.id, self.label(e.u), self.label(e.v)] for e in self._edges.values()],
        }

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
