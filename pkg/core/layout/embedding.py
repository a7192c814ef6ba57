"""BookEmbedding: circular vertex order plus an edge-to-page map."""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Literal, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from core.errors import ArgumentError
from core.graph import Graph, connected_components


class LayoutDocument(BaseModel):
    """Layout JSON with original vertex labels."""

    order: List[int]
    page: Dict[str, Literal[0, 1]]
    crossings: int = 0
    crossed_edges: List[int] = []


@dataclass(frozen=True)
class BookEmbedding:
    """
    A circular spine order and a page per edge.

    Index in `order` is the spine position. 1-page layouts put every edge
    on page 0.
    """

    order: Tuple[int, ...]
    page: Dict[int, int]
    _positions: Dict[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'order', tuple(self.order))
        object.__setattr__(self, 'page', dict(self.page))
        object.__setattr__(self, '_positions', {v: i for i, v in enumerate(self.order)})
        if len(self._positions) != len(self.order):
            raise ArgumentError("Spine order repeats a vertex")
        for e, p in self.page.items():
            if p not in (0, 1):
                raise ArgumentError(f"Edge {e} has page {p}; pages are 0 and 1")

    @classmethod
    def one_page(cls, g: Graph, order: Iterable[int]) -> 'BookEmbedding':
        """Every edge on page 0."""
        return cls(tuple(order), {e: 0 for e in g.edge_ids})

    @property
    def positions(self) -> Dict[int, int]:
        return self._positions

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def fingerprint(self) -> int:
        """Checksum of order and page map."""
        return hash((self.order, tuple(sorted(self.page.items()))))

    def position(self, v: int) -> int:
        try:
            return self._positions[v]
        except KeyError:
            raise ArgumentError(f"Vertex {v} is not on the spine") from None

    def page_of(self, edge_id: int) -> int:
        try:
            return self.page[edge_id]
        except KeyError:
            raise ArgumentError(f"Unknown edge id {edge_id}") from None

    def validate(self, g: Graph) -> None:
        """Raise ArgumentError unless this layout covers exactly g's vertices and edges."""
        if len(self.order) != g.n or any(not g.has_vertex(v) for v in self.order):
            raise ArgumentError("Layout order does not match the graph's vertex set")
        if len(self.page) != g.m or any(not g.has_edge(e) for e in self.page):
            raise ArgumentError("Layout pages do not match the graph's edge set")

    def with_order(self, order: Iterable[int]) -> 'BookEmbedding':
        return BookEmbedding(tuple(order), self.page)

    def with_pages(self, page: Dict[int, int]) -> 'BookEmbedding':
        return BookEmbedding(self.order, page)

    def complemented(self) -> 'BookEmbedding':
        return BookEmbedding(self.order, {e: 1 - p for e, p in self.page.items()})

    def page_vector(self) -> Tuple[int, ...]:
        return tuple(self.page[e] for e in sorted(self.page))

    # ==================== Serialization ====================

    def to_document(self, g: Graph, report=None) -> LayoutDocument:
        """Layout JSON document with original labels."""
        return LayoutDocument(
            order=[g.label(v) for v in self.order],
            page={str(e): self.page[e] for e in sorted(self.page)},
            crossings=report.crossings if report is not None else 0,
            crossed_edges=sorted(report.crossed_edges) if report is not None else [],
        )

    @classmethod
    def from_document(cls, g: Graph, doc: LayoutDocument) -> 'BookEmbedding':
        """Rebuild a layout of g from a document; raises ArgumentError on mismatch."""
        try:
            page = {int(e): p for e, p in doc.page.items()}
        except ValueError:
            raise ArgumentError("Page keys must be integer edge ids") from None
        emb = cls(tuple(g.vertex_of(label) for label in doc.order), page)
        emb.validate(g)
        return emb


def canonicalize(emb: BookEmbedding) -> BookEmbedding:
    """
    Deterministic representative of the rotation/reflection/page-swap class.

    Rotate the smallest vertex to the front, then keep the lexicographically
    smallest (order, page vector) among both directions and both page
    orientations.
    """
    if not emb.order:
        return emb
    start = emb.order.index(min(emb.order))
    forward = emb.order[start:] + emb.order[:start]
    backward = (forward[0],) + tuple(reversed(forward[1:]))

    best: Optional[BookEmbedding] = None
    best_key = None
    for order in (forward, backward):
        for flip in (False, True):
            pages = {e: (1 - p if flip else p) for e, p in emb.page.items()}
            candidate = BookEmbedding(order, pages)
            key = (candidate.order, candidate.page_vector())
            if best_key is None or key < best_key:
                best, best_key = candidate, key
    return best


def baseline_2page(g: Graph) -> BookEmbedding:
    """
    DFS spanning forest on page 0, every remaining edge on page 1.

    The forest is drawn in DFS preorder, so page 0 is crossing-free and at
    most a = m - n + c edges (all on page 1) can be crossed.
    """
    G = g.to_networkx()
    order: List[int] = []
    tree: Dict[Tuple[int, int], bool] = {}
    for comp in connected_components(g):
        source = comp[0]
        order.append(source)
        for u, v in nx.dfs_edges(G, source=source):
            order.append(v)
            tree[(u, v)] = True
            tree[(v, u)] = True

    page: Dict[int, int] = {}
    claimed: Dict[Tuple[int, int], bool] = {}
    for e in sorted(g.edge_ids):
        edge = g.edge(e)
        key = (min(edge.u, edge.v), max(edge.u, edge.v))
        if (edge.u, edge.v) in tree and key not in claimed:
            claimed[key] = True
            page[e] = 0
        else:
            page[e] = 1
    return BookEmbedding(tuple(order), page)
