"""Maximal degree-2 paths of a graph with minimum degree >= 2."""
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .graph import Graph


@dataclass(frozen=True)
class DegreeTwoPath:
    """
    A maximal run of degree-2 vertices between two hubs.

    `edges[i]` joins the i-th and (i+1)-th vertex of
    endpoints[0], *interior, endpoints[1]. For a bare cycle both endpoints
    are the cycle's smallest vertex and `cyclic` is set.
    """

    endpoints: Tuple[int, int]
    interior: Tuple[int, ...]
    edges: Tuple[int, ...]
    cyclic: bool = False

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        """Starts and ends at the same vertex (bare cycle or hub loop)."""
        return self.endpoints[0] == self.endpoints[1]

    @property
    def vertices(self) -> Tuple[int, ...]:
        if self.closed:
            return (self.endpoints[0],) + self.interior
        return (self.endpoints[0],) + self.interior + (self.endpoints[1],)


def _walk(g: Graph, start: int, first_edge: int, used: Dict[int, bool]) -> Tuple[List[int], List[int], int]:
    interior: List[int] = []
    edges = [first_edge]
    used[first_edge] = True
    via = first_edge
    cur = g.edge(first_edge).other(start)
    while g.degree(cur) == 2 and cur != start:
        interior.append(cur)
        e1, e2 = g.incident(cur)
        nxt = e2 if e1 == via else e1
        edges.append(nxt)
        used[nxt] = True
        via = nxt
        cur = g.edge(nxt).other(cur)
    return interior, edges, cur


def maximal_degree_two_paths(core: Graph) -> List[DegreeTwoPath]:
    """
    Partition the edges into maximal degree-2 paths.

    Paths are walked from hubs (degree != 2) in id order; components that
    are bare cycles are walked last, each from its smallest vertex.
    """
    used: Dict[int, bool] = {}
    paths: List[DegreeTwoPath] = []

    for hub in sorted(v for v in core.vertices if core.degree(v) != 2):
        for e in core.incident(hub):
            if e in used:
                continue
            interior, edges, end = _walk(core, hub, e, used)
            paths.append(DegreeTwoPath((hub, end), tuple(interior), tuple(edges)))

    for v in sorted(core.vertices):
        for e in core.incident(v):
            if e in used:
                continue
            interior, edges, _ = _walk(core, v, e, used)
            paths.append(DegreeTwoPath((v, v), tuple(interior), tuple(edges), cyclic=True))
    return paths
