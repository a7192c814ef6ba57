"""Kernelization: prune pendant trees, shorten long degree-2 paths."""
import logging
from dataclasses import dataclass, field, asdict
from typing import Any, Callable, Dict, List, Optional, Tuple

from core.errors import ArgumentError, KernelBoundError
from core.graph import (
    DegreeTwoPath,
    Edge,
    Graph,
    PrunedTree,
    connected_components,
    maximal_degree_two_paths,
    two_core,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathRecord:
    """
    Replay record of one shortened path.

    The kernel keeps the first `kept` interior vertices and edges plus the
    original last edge, re-pointed from the representative to the far
    endpoint.
    """

    endpoints: Tuple[int, int]
    interior: Tuple[int, ...]
    edges: Tuple[int, ...]
    kept: int

    @property
    def representative(self) -> int:
        return self.interior[self.kept - 1]

    @property
    def predecessor(self) -> int:
        """Neighbour of the representative on the start side."""
        return self.interior[self.kept - 2] if self.kept >= 2 else self.endpoints[0]

    @property
    def removed_vertices(self) -> Tuple[int, ...]:
        return self.interior[self.kept:]

    @property
    def removed_edges(self) -> Tuple[int, ...]:
        return self.edges[self.kept:-1]

    @property
    def last_edge(self) -> int:
        return self.edges[-1]

    @property
    def original_length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class KernelBound:
    """Size of one kernel component against its bound (None when no bound applies)."""

    k: int
    ell: int
    vertices: int
    edges: int
    vertex_bound: Optional[int]
    edge_bound: Optional[int]

    @property
    def holds(self) -> bool:
        if self.vertex_bound is not None and self.vertices > self.vertex_bound:
            return False
        if self.edge_bound is not None and self.edges > self.edge_bound:
            return False
        return True

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Kernel:
    graph: Graph
    ell: int
    path_records: Tuple[PathRecord, ...]
    tree_records: Dict[int, PrunedTree]
    tree_roots: Tuple[int, ...]
    source_k: int
    source: Graph = field(repr=False)
    bounds: Tuple[KernelBound, ...] = ()

    @property
    def removed_vertex_count(self) -> int:
        return self.source.n - self.graph.n

    def dump(self) -> str:
        """Edge list of the kernel followed by '#' provenance comments."""
        lines = [self.graph.to_edge_list().rstrip("\n")] if self.graph.m else []
        for b in self.bounds:
            vb = "-" if b.vertex_bound is None else b.vertex_bound
            eb = "-" if b.edge_bound is None else b.edge_bound
            lines.append(f"# component k={b.k} ell={b.ell} vertices={b.vertices}/{vb} edges={b.edges}/{eb}")
        label = self.source.label
        for rec in self.path_records:
            lines.append(
                f"# path {label(rec.endpoints[0])}..{label(rec.endpoints[1])}: "
                f"length {rec.original_length} -> {rec.kept + 1}, "
                f"removed {len(rec.removed_vertices)} vertices"
            )
        roots = set(self.tree_roots)
        for attachment in sorted(self.tree_records):
            tree = self.tree_records[attachment]
            where = "component rooted at" if attachment in roots else "tree at"
            lines.append(f"# {where} {label(attachment)}: pruned {tree.size} vertices")
        return "\n".join(lines) + "\n"


# ==================== Path Shortening ====================

def _target_length(path: DegreeTwoPath, ell: int) -> int:
    return max(ell, 3) if path.closed else ell


def _shorten(core: Graph, ell_of: Callable[[int], int]) -> Tuple[Graph, List[PathRecord]]:
    records: List[PathRecord] = []
    removed_vertices: Dict[int, bool] = {}
    removed_edges: Dict[int, bool] = {}
    repointed: Dict[int, Edge] = {}

    for path in maximal_degree_two_paths(core):
        target = _target_length(path, ell_of(path.endpoints[0]))
        if path.length <= target:
            continue
        kept = target - 1
        record = PathRecord(path.endpoints, path.interior, path.edges, kept)
        records.append(record)
        for v in record.removed_vertices:
            removed_vertices[v] = True
        for e in record.removed_edges:
            removed_edges[e] = True
        repointed[record.last_edge] = Edge(record.last_edge, record.representative, path.endpoints[1])

    vertices = [v for v in core.vertices if v not in removed_vertices]
    edges = [repointed.get(e.id, e) for e in core.edges() if e.id not in removed_edges]
    return core.with_edges(edges, vertices), records


def shorten_paths(core: Graph, ell: int) -> Kernel:
    """Cap every maximal degree-2 path at `ell` edges (closed paths at max(ell, 3))."""
    if ell < 2:
        raise ArgumentError(f"Path bound must be at least 2, got {ell}")
    if any(core.degree(v) < 2 for v in core.vertices):
        raise ArgumentError("Path shortening needs minimum degree 2")
    graph, records = _shorten(core, lambda v: ell)
    k = core.m - core.n + len(connected_components(core))
    return Kernel(graph, ell, tuple(records), {}, (), k, core)


# ==================== Kernels ====================

def _kernel(
    component: Graph,
    ell_of_k: Callable[[int], int],
    bound_of_k: Callable[[int, int], Tuple[Optional[int], Optional[int]]],
    name: str,
) -> Kernel:
    tc = two_core(component)
    core = tc.core

    comps = connected_components(core)
    k_of: Dict[int, int] = {}
    for comp in comps:
        members = set(comp)
        m = sum(1 for e in core.edges() if e.u in members)
        k = m - len(comp) + 1
        for v in comp:
            k_of[v] = k

    graph, records = _shorten(core, lambda v: max(2, ell_of_k(k_of[v])))

    loops_of: Dict[int, int] = {}
    for path in maximal_degree_two_paths(graph):
        if path.closed and not path.cyclic:
            loops_of[path.endpoints[0]] = loops_of.get(path.endpoints[0], 0) + 1

    bounds: List[KernelBound] = []
    for comp in comps:
        members = set(v for v in comp if graph.has_vertex(v))
        k = k_of[comp[0]]
        ell = max(2, ell_of_k(k))
        n_kernel = len(members)
        m_kernel = sum(1 for e in graph.edges() if e.u in members)
        loops = sum(loops_of.get(v, 0) for v in members)
        vb, eb = bound_of_k(k, loops)
        bound = KernelBound(k, ell, n_kernel, m_kernel, vb, eb)
        if not bound.holds:
            raise KernelBoundError(
                f"{name} kernel with k={k} has {n_kernel} vertices and {m_kernel} edges, "
                f"bounds {vb} and {eb}"
            )
        bounds.append(bound)

    source_k = max((b.k for b in bounds), default=0)
    ell = max((b.ell for b in bounds), default=2)
    logger.info(
        "%s kernel: %d -> %d vertices, %d -> %d edges (k=%d, ell=%d)",
        name, component.n, graph.n, component.m, graph.m, source_k, ell,
    )
    return Kernel(
        graph=graph,
        ell=ell,
        path_records=tuple(records),
        tree_records=dict(tc.trees),
        tree_roots=tc.tree_roots,
        source_k=source_k,
        source=component,
        bounds=tuple(bounds),
    )


def _bound_1page(k: int, loops: int) -> Tuple[Optional[int], Optional[int]]:
    if k < 2:
        return None, None
    return 5 * k + loops, 6 * k + loops


def kernel_1page(component: Graph) -> Kernel:
    """Kernel with ell = 2 for both 1-page objectives."""
    return _kernel(component, lambda k: 2, _bound_1page, "1-page")


def kernel_2page_crossings(component: Graph) -> Kernel:
    """Kernel with ell = 2k^2 for 2-page crossings."""
    return _kernel(component, lambda k: 2 * k * k, lambda k, _: (6 * k ** 3, 6 * k ** 3) if k >= 1 else (None, None),
                   "2-page crossings")


def kernel_2page_crossed(component: Graph) -> Kernel:
    """Kernel with ell = 2k for 2-page crossed edges."""
    return _kernel(component, lambda k: 2 * k, lambda k, _: (6 * k * k, 6 * k * k) if k >= 1 else (None, None),
                   "2-page crossed-edges")
