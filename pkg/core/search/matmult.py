"""
Crossing minimization as a minimum-weight triangle over ordered vertex blocks.

A circular order is cut into three consecutive blocks A | B | C of equal
size. Each crossing is charged (doubled, so every charge is an integer) to
the block pairs that can see it:

* both edges inside one block: 1 to each of the two pairs containing it;
* endpoints in exactly two blocks: 2 to that pair;
* endpoints in three blocks, two in a shared block: 1 to each pair
  containing the shared block.

Every charged crossing is decidable from the orders of the two blocks and
the vertex set of the third, so W12[A,B] + W23[B,C] + W31[C,A] is twice
the crossing count of A | B | C. The minimum triangle comes from one
min-plus product.
"""
import itertools
import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import ArgumentError, InvariantError
from core.graph import Graph
from core.layout import BookEmbedding, canonicalize, count
from core.settings import SearchLimits
from .result import ExplorationBudget, Measure, Objective, SearchResult, Style, check_cap, resolve_limits

logger = logging.getLogger(__name__)

INF = 2 ** 40


class Slot(Enum):
    P1 = 1
    P2 = 2
    P3 = 3

    @property
    def next(self) -> 'Slot':
        return Slot(self.value % 3 + 1)


@dataclass(frozen=True)
class OrderedBlock:
    slot: Slot
    members: Tuple[int, ...]


# ==================== Blocks ====================

def padded_vertices(kernel: Graph) -> Tuple[List[int], List[int]]:
    """Real vertices and the dummy ids needed to reach a multiple of three."""
    real = sorted(kernel.vertices)
    top = max(real, default=-1)
    dummies = [top + 1 + i for i in range(-len(real) % 3)]
    if not real:
        dummies = [0, 1, 2]
    return real, dummies


def enumerate_blocks(kernel: Graph, slot: Slot) -> List[OrderedBlock]:
    """
    All ordered N/3-subsets for a slot.

    P1 blocks start with the smallest real vertex. Dummies sit at the end of
    a block in increasing order.
    """
    real, dummies = padded_vertices(kernel)
    everything = real + dummies
    quota = len(everything) // 3
    dummy_set = set(dummies)
    anchor = everything[0]
    blocks: List[OrderedBlock] = []

    if slot is Slot.P1:
        pool = [v for v in everything if v != anchor]
        candidates = ((anchor,) + rest for rest in itertools.permutations(pool, quota - 1))
    else:
        candidates = itertools.permutations(everything, quota)

    for members in candidates:
        tail = [v for v in members if v in dummy_set]
        if tail and (list(members[-len(tail):]) != tail or tail != sorted(tail)):
            continue
        blocks.append(OrderedBlock(slot, tuple(members)))
    return blocks


# ==================== Charges ====================

def _edge_pairs(kernel: Graph) -> List[Tuple[int, int, int, int, int, int]]:
    """Edge pairs with four distinct endpoints: (e, f, a, b, c, d)."""
    edges = list(kernel.edges())
    out = []
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if len({e.u, e.v, f.u, f.v}) == 4:
                out.append((e.id, f.id, e.u, e.v, f.u, f.v))
    return out


def _charges(pairs, first: Sequence[int], second: Sequence[int], everything: Sequence[int]) -> np.ndarray:
    """Doubled charge of every edge pair to the block pair (first, second)."""
    region: Dict[int, int] = {}
    pos: Dict[int, int] = {}
    for i, v in enumerate(first):
        region[v], pos[v] = 0, i
    for i, v in enumerate(second, start=len(first)):
        region[v], pos[v] = 1, i
    # third block in any order; charged crossings do not depend on it
    i = len(first) + len(second)
    for v in everything:
        if v not in region:
            region[v], pos[v] = 2, i
            i += 1

    out = np.zeros(len(pairs), dtype=np.int64)
    for k, (_, _, a, b, c, d) in enumerate(pairs):
        lo, hi = sorted((pos[a], pos[b]))
        if (lo < pos[c] < hi) == (lo < pos[d] < hi):
            continue
        regions = [region[a], region[b], region[c], region[d]]
        present = set(regions)
        if len(present) == 1:
            out[k] = 0 if 2 in present else 1
        elif len(present) == 2:
            out[k] = 0 if 2 in present else 2
        else:
            shared = max(present, key=regions.count)
            out[k] = 0 if shared == 2 else 1
    return out


def _block_charges(kernel: Graph, pairs, left: List[OrderedBlock], right: List[OrderedBlock],
                   everything: Sequence[int]) -> Tuple[List[Tuple[int, int]], np.ndarray]:
    """Index pairs of disjoint blocks and their charge rows."""
    index: List[Tuple[int, int]] = []
    rows: List[np.ndarray] = []
    for i, x in enumerate(left):
        xs = set(x.members)
        for j, y in enumerate(right):
            if xs.isdisjoint(y.members):
                index.append((i, j))
                rows.append(_charges(pairs, x.members, y.members, everything))
    matrix = np.vstack(rows) if rows else np.zeros((0, len(pairs)), dtype=np.int64)
    return index, matrix


def _weights(shape: Tuple[int, int], index: List[Tuple[int, int]], charges: np.ndarray,
             same_page: np.ndarray) -> np.ndarray:
    w = np.full(shape, INF, dtype=np.int64)
    if index:
        rows, cols = zip(*index)
        w[list(rows), list(cols)] = charges @ same_page
    return w


def pair_weight(kernel: Graph, first: OrderedBlock, second: OrderedBlock,
                page_of: Optional[Dict[int, int]] = None) -> int:
    """Doubled weight of the G' edge between two blocks in consecutive slots."""
    if first.slot.next is not second.slot:
        raise ArgumentError(f"Slot {first.slot.name} does not precede slot {second.slot.name}")
    if not set(first.members).isdisjoint(second.members):
        return INF
    real, dummies = padded_vertices(kernel)
    pairs = _edge_pairs(kernel)
    charges = _charges(pairs, first.members, second.members, real + dummies)
    return int(charges @ _same_page(pairs, page_of))


def _same_page(pairs, page_of: Optional[Dict[int, int]]) -> np.ndarray:
    if page_of is None:
        return np.ones(len(pairs), dtype=np.int64)
    return np.array([1 if page_of[e] == page_of[f] else 0 for e, f, *_ in pairs], dtype=np.int64)


# ==================== Min-Plus ====================

def min_plus_product(x, y) -> np.ndarray:
    """Cubic (min, +) product; entries at or above INF stay INF."""
    x = np.minimum(np.asarray(x, dtype=np.float64), INF).astype(np.int64)
    y = np.minimum(np.asarray(y, dtype=np.float64), INF).astype(np.int64)
    if x.ndim != 2 or y.ndim != 2 or x.shape[1] != y.shape[0]:
        raise ArgumentError(f"Cannot multiply shapes {x.shape} and {y.shape}")
    out = np.empty((x.shape[0], y.shape[1]), dtype=np.int64)
    for i in range(x.shape[0]):
        out[i] = (x[i][:, None] + y).min(axis=0, initial=INF)
    return np.minimum(out, INF)


class _TriangleSearch:
    """Block lists and charge rows for one kernel, shared across page assignments."""

    def __init__(self, kernel: Graph):
        self.kernel = kernel
        real, dummies = padded_vertices(kernel)
        self.real = set(real)
        self.everything = real + dummies
        self.pairs = _edge_pairs(kernel)
        self.p1 = enumerate_blocks(kernel, Slot.P1)
        self.p2 = enumerate_blocks(kernel, Slot.P2)
        self.p3 = enumerate_blocks(kernel, Slot.P3)
        self.c12 = _block_charges(kernel, self.pairs, self.p1, self.p2, self.everything)
        self.c23 = _block_charges(kernel, self.pairs, self.p2, self.p3, self.everything)
        self.c31 = _block_charges(kernel, self.pairs, self.p3, self.p1, self.everything)

    @property
    def triangles(self) -> int:
        return len(self.p1) * len(self.p2) * len(self.p3)

    def best(self, page_of: Optional[Dict[int, int]]) -> Tuple[int, Tuple[int, ...]]:
        """Minimum crossing count and the corresponding order (dummies stripped)."""
        same = _same_page(self.pairs, page_of)
        w12 = _weights((len(self.p1), len(self.p2)), *self.c12, same)
        w23 = _weights((len(self.p2), len(self.p3)), *self.c23, same)
        w31 = _weights((len(self.p3), len(self.p1)), *self.c31, same)
        total = min_plus_product(w12, w23) + w31.T
        a, c = np.unravel_index(int(np.argmin(total)), total.shape)
        doubled = int(total[a, c])
        if doubled >= INF:
            raise InvariantError("No vertex-disjoint block triple exists")
        b = int(np.argmin(w12[a, :] + w23[:, c]))
        members = self.p1[a].members + self.p2[b].members + self.p3[c].members
        return doubled // 2, tuple(v for v in members if v in self.real)


def _finish(kernel: Graph, objective: Objective, value: int, order: Tuple[int, ...],
            page: Dict[int, int], explored: int, started: float) -> SearchResult:
    layout = BookEmbedding(order, page)
    recount = count(kernel, layout).crossings
    if recount != value:
        raise InvariantError(f"Triangle weight {value} disagrees with recount {recount}")
    return SearchResult(objective, value, canonicalize(layout), explored, time.perf_counter() - started)


# ==================== Engines ====================

def solve_1page_matmult(kernel: Graph, limits: Optional[SearchLimits] = None) -> SearchResult:
    """1-page crossing number via one min-plus product over block triangles."""
    limits = resolve_limits(limits)
    check_cap("vertices", kernel.n, limits.max_vertices_matmult, "matmult")
    started = time.perf_counter()
    objective = Objective.of(Style.ONE_PAGE, Measure.CROSSINGS)
    if kernel.n == 0:
        return SearchResult(objective, 0, BookEmbedding((), {}), 0, 0.0)

    search = _TriangleSearch(kernel)
    budget = ExplorationBudget(limits.budget)
    budget.tick(search.triangles)
    value, order = search.best(None)
    logger.debug("matmult 1-page on %d vertices: value %d", kernel.n, value)
    return _finish(kernel, objective, value, order, {e: 0 for e in kernel.edge_ids}, budget.explored, started)


def solve_2page_matmult(kernel: Graph, objective: str = Measure.CROSSINGS,
                        limits: Optional[SearchLimits] = None) -> SearchResult:
    """2-page crossing number: one triangle search per page assignment (first edge pinned)."""
    if Measure(objective) is not Measure.CROSSINGS:
        raise ArgumentError("The matmult engine only minimizes crossings")
    limits = resolve_limits(limits)
    check_cap("vertices", kernel.n, limits.max_vertices_matmult, "matmult")
    check_cap("edges", kernel.m, limits.max_edges_2page, "matmult")
    started = time.perf_counter()
    result_objective = Objective.of(Style.TWO_PAGE, Measure.CROSSINGS)
    if kernel.n == 0:
        return SearchResult(result_objective, 0, BookEmbedding((), {}), 0, 0.0)

    search = _TriangleSearch(kernel)
    budget = ExplorationBudget(limits.budget)
    edges = sorted(kernel.edge_ids)
    best: Optional[Tuple[int, Tuple[int, ...], Dict[int, int]]] = None
    for choice in itertools.product((0, 1), repeat=max(len(edges) - 1, 0)):
        budget.tick(search.triangles)
        page = dict(zip(edges, (0,) + choice))
        value, order = search.best(page)
        if best is None or value < best[0]:
            best = (value, order, page)
        if value == 0:
            break
    value, order, page = best
    logger.debug("matmult 2-page on %d vertices: value %d", kernel.n, value)
    return _finish(kernel, result_objective, value, order, page, budget.explored, started)
