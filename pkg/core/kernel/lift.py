"""Expand a kernel layout into a layout of the kernel's source graph."""
import logging
from typing import Dict, List

from core.errors import InvariantError
from core.layout import BookEmbedding
from .kernel import Kernel, PathRecord

logger = logging.getLogger(__name__)


def _restore_path(order: List[int], page: Dict[int, int], record: PathRecord) -> None:
    """
    Put the removed vertices next to the representative r.

    The block goes on the side of r facing away from r's start-side
    neighbour, so the restored last edge meets the same chords as the
    kernel edge r-b did. The short edges inside the block never cross.
    """
    r, b, x = record.representative, record.endpoints[1], record.predecessor
    n = len(order)
    pos = {v: i for i, v in enumerate(order)}
    i = pos[r]
    x_clockwise = (pos[x] - i) % n < (pos[b] - i) % n
    removed = list(record.removed_vertices)
    if x_clockwise:
        order[i:i] = reversed(removed)
    else:
        order[i + 1:i + 1] = removed

    p = page[record.last_edge]
    for e in record.removed_edges:
        page[e] = p


def lift_layout(kernel: Kernel, emb: BookEmbedding) -> BookEmbedding:
    """
    Layout of kernel.source with the same crossings as `emb`.

    Paths are restored first, then pendant trees in DFS preorder right after
    their attachment, then whole-tree components at the end. Tree edges go
    on page 0.
    """
    emb.validate(kernel.graph)
    order = list(emb.order)
    page = dict(emb.page)

    for record in kernel.path_records:
        _restore_path(order, page, record)

    roots = set(kernel.tree_roots)
    with_trees: List[int] = []
    for v in order:
        with_trees.append(v)
        tree = kernel.tree_records.get(v)
        if tree is not None and v not in roots:
            with_trees.extend(tree.vertices)
            for e in tree.edges:
                page[e] = 0
    order = with_trees

    for root in kernel.tree_roots:
        order.append(root)
        tree = kernel.tree_records.get(root)
        if tree is not None:
            order.extend(tree.vertices)
            for e in tree.edges:
                page[e] = 0

    lifted = BookEmbedding(tuple(order), page)
    try:
        lifted.validate(kernel.source)
    except ValueError as exc:
        raise InvariantError(f"Lifted layout does not cover the source graph: {exc}") from exc
    logger.debug("Lifted %d kernel vertices to %d", emb.n, lifted.n)
    return lifted
