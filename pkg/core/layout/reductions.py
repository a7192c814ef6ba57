"""
Crossing-preserving rearrange-and-contract reductions on degree-2 paths.

Each reduction removes one degree-2 vertex b from a layout and merges its
two edges into one, keeping the crossing count and the crossed-edge count
unchanged. Betweenness is read on a line obtained by cutting the circle
just before an anchor vertex.
"""
import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from core.errors import ArgumentError, InvariantError
from core.graph import Edge, Graph, maximal_degree_two_paths
from .crossings import count, edges_cross
from .embedding import BookEmbedding

logger = logging.getLogger(__name__)


class PairType(Enum):
    M = "m"
    S = "s"
    RAINBOW = "rainbow"
    SPIRAL = "spiral"


# ==================== Helpers ====================

def _pair_vertices(g: Graph, ab: int, bc: int) -> Tuple[int, int, int]:
    if ab == bc:
        raise ArgumentError("A pair needs two distinct edges")
    e, f = g.edge(ab), g.edge(bc)
    shared = set(e.endpoints) & set(f.endpoints)
    if len(shared) != 1:
        raise ArgumentError(f"Edges {ab} and {bc} must share exactly one vertex")
    (b,) = shared
    return e.other(b), b, f.other(b)


def _other_edge(g: Graph, v: int, edge_id: int) -> int:
    (rest,) = [e for e in g.incident(v) if e != edge_id]
    return rest


def _default_anchor(g: Graph, exclude: Tuple[int, ...]) -> Optional[int]:
    candidates = [v for v in g.vertices if v not in exclude]
    if not candidates:
        return None
    return min(candidates, key=lambda v: (-g.degree(v), v))


def _line(emb: BookEmbedding, anchor: int) -> List[int]:
    start = emb.position(anchor)
    return list(emb.order[start:] + emb.order[:start])


def _contract(g: Graph, emb: BookEmbedding, order: List[int], ab: int, bc: int,
              a: int, b: int, c: int) -> Tuple[Graph, BookEmbedding]:
    """Drop b and bc; ab becomes the edge a-c on its own page."""
    edges = []
    for edge in g.edges():
        if edge.id == bc:
            continue
        edges.append(Edge(ab, a, c) if edge.id == ab else edge)
    reduced = g.with_edges(edges, [v for v in g.vertices if v != b])
    page = {e: p for e, p in emb.page.items() if e != bc}
    return reduced, BookEmbedding(tuple(v for v in order if v != b), page)


# ==================== Classification ====================

def classify_pair(g: Graph, emb: BookEmbedding, ab: int, bc: int, anchor: Optional[int] = None) -> PairType:
    """
    Tag two consecutive edges a-b, b-c by page equality and betweenness.

    The anchor defaults to the highest-degree vertex outside {a, b, c}.
    """
    a, b, c = _pair_vertices(g, ab, bc)
    if a == c:
        raise ArgumentError(f"Edges {ab} and {bc} are parallel")
    if anchor is None:
        anchor = _default_anchor(g, (a, b, c))
    if anchor is None:
        anchor = a
    line = _line(emb, anchor)
    at = {v: i for i, v in enumerate(line)}
    lo, hi = sorted((at[a], at[c]))
    between = lo < at[b] < hi
    if emb.page_of(ab) == emb.page_of(bc):
        return PairType.M if between else PairType.RAINBOW
    return PairType.S if between else PairType.SPIRAL


# ==================== Reductions ====================

def reduce_m_rainbow(g: Graph, emb: BookEmbedding, ab: int, bc: int) -> Tuple[Graph, BookEmbedding]:
    """
    Contract an uncrossed same-page edge bc into c.

    Every chord on the shared page avoids separating b from c, so moving b
    next to c does not change the crossings of ab. Once b sits next to c,
    contracting bc leaves the other vertices in their original circular
    order, so the result is the input order without b.
    """
    a, b, c = _pair_vertices(g, ab, bc)
    if a == c:
        raise ArgumentError(f"Edges {ab} and {bc} are parallel")
    if classify_pair(g, emb, ab, bc) not in (PairType.M, PairType.RAINBOW):
        raise ArgumentError("m/rainbow reduction needs both edges on one page")
    if g.degree(b) != 2 or g.degree(c) != 2:
        raise ArgumentError("m/rainbow reduction needs deg(b) = deg(c) = 2")
    report = count(g, emb)
    if report.per_edge[bc] != 0:
        raise ArgumentError(f"Edge {bc} is crossed")
    cy = _other_edge(g, c, bc)
    if edges_cross(g, emb, ab, cy):
        raise ArgumentError(f"Edge {ab} crosses edge {cy}; contracting would lose that crossing")

    return _contract(g, emb, list(emb.order), ab, bc, a, b, c)


def _check_block(g: Graph, emb: BookEmbedding, line: List[int], lo: int, hi: int, page: int) -> None:
    block = set(line[lo:hi])
    for edge in g.edges():
        if emb.page[edge.id] != page:
            continue
        if (edge.u in block) != (edge.v in block):
            raise InvariantError(f"Edge {edge.id} enters the moved block on page {page}")


def reduce_s_spiral(g: Graph, emb: BookEmbedding, ab: int, bc: int) -> Tuple[Graph, BookEmbedding]:
    """
    Remove b from an uncrossed pair of edges drawn on different pages.

    When a's other edge shares ab's page (or c's other edge shares bc's
    page), that neighbouring pair is an m/rainbow pair and is reduced
    instead. Otherwise the block running from b (s) or c (spiral) to the far
    end of the pair is moved next to a, which makes a and c spine
    neighbours, and bc is contracted.
    """
    a, b, c = _pair_vertices(g, ab, bc)
    if a == c:
        raise ArgumentError(f"Edges {ab} and {bc} are parallel")
    kind = classify_pair(g, emb, ab, bc)
    if kind not in (PairType.S, PairType.SPIRAL):
        raise ArgumentError("s/spiral reduction needs the edges on different pages")
    if g.degree(a) != 2 or g.degree(b) != 2 or g.degree(c) != 2:
        raise ArgumentError("s/spiral reduction needs deg(a) = deg(b) = deg(c) = 2")
    report = count(g, emb)
    if report.per_edge[ab] or report.per_edge[bc]:
        raise ArgumentError(f"Edges {ab} and {bc} must both be uncrossed")

    xa = _other_edge(g, a, ab)
    cy = _other_edge(g, c, bc)
    if emb.page[xa] == emb.page[ab]:
        return reduce_m_rainbow(g, emb, xa, ab)
    if emb.page[cy] == emb.page[bc]:
        return reduce_m_rainbow(g, emb, cy, bc)

    anchor = _default_anchor(g, (a, b, c))
    line = _line(emb, anchor if anchor is not None else a)
    at = {v: i for i, v in enumerate(line)}
    # Mirror so that a precedes c; for spiral also make c lie between a and b
    if at[a] > at[c]:
        line.reverse()
        at = {v: i for i, v in enumerate(line)}
    if kind is PairType.SPIRAL and at[b] < at[a]:
        line.reverse()
        a, c = c, a
        at = {v: i for i, v in enumerate(line)}

    ab_id, bc_id = _edge_between(g, a, b, ab, bc), _edge_between(g, b, c, ab, bc)
    lower = emb.page[bc_id]
    ia, ib, ic = at[a], at[b], at[c]
    if kind is PairType.S:
        # a .. [b .. c]  ->  [b .. c] a ..
        _check_block(g, emb, line, ib, ic + 1, lower)
        moved = line[:ia] + line[ib:ic + 1] + line[ia:ib] + line[ic + 1:]
    else:
        # a .. [c .. b]  ->  a [c .. b] ..
        _check_block(g, emb, line, ic, ib + 1, lower)
        moved = line[:ia + 1] + line[ic:ib + 1] + line[ia + 1:ic] + line[ib + 1:]

    logger.debug("%s reduction removes vertex %d", kind.value, b)
    return _contract(g, emb, moved, ab_id, bc_id, a, b, c)


def _edge_between(g: Graph, u: int, v: int, *candidates: int) -> int:
    for e in candidates:
        if set(g.edge(e).endpoints) == {u, v}:
            return e
    raise InvariantError(f"No edge between {u} and {v} among {candidates}")


# ==================== Fixpoint ====================

def _try_pair(g: Graph, emb: BookEmbedding, per_edge: Dict[int, int], e1: int, e2: int) -> Optional[Tuple[Graph, BookEmbedding]]:
    """Reduce e1 = a-b, e2 = b-c with b and c of degree 2 when a rule applies."""
    a, b, c = _pair_vertices(g, e1, e2)
    if a == c or g.degree(b) != 2 or g.degree(c) != 2:
        return None
    if emb.page[e1] == emb.page[e2]:
        if per_edge[e2] == 0 and not edges_cross(g, emb, e1, _other_edge(g, c, e2)):
            return reduce_m_rainbow(g, emb, e1, e2)
        return None
    if g.degree(a) == 2 and per_edge[e1] == 0 and per_edge[e2] == 0:
        return reduce_s_spiral(g, emb, e1, e2)
    return None


def _reduce_once(g: Graph, emb: BookEmbedding) -> Optional[Tuple[Graph, BookEmbedding]]:
    per_edge = count(g, emb).per_edge
    for path in maximal_degree_two_paths(g):
        if path.length < 4:
            continue
        edges = path.edges
        pairs = [(edges[i], edges[i + 1]) for i in range(len(edges) - 1)]
        if path.closed and path.cyclic:
            pairs.append((edges[-1], edges[0]))
        for e1, e2 in pairs:
            for first, second in ((e1, e2), (e2, e1)):
                result = _try_pair(g, emb, per_edge, first, second)
                if result is not None:
                    return result
    return None


def reduce_exhaustively(g: Graph, emb: BookEmbedding) -> Tuple[Graph, BookEmbedding]:
    """Apply reductions to degree-2 paths of length >= 4 until none applies."""
    emb.validate(g)
    steps = 0
    while True:
        result = _reduce_once(g, emb)
        if result is None:
            break
        g, emb = result
        steps += 1
    logger.info("Reduced layout by %d vertices", steps)
    return g, emb
