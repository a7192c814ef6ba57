"""Edge-list ingestion."""
import logging
from pathlib import Path
from typing import Dict, List, Union

from core.errors import ParseError
from .edge import Edge
from .graph import Graph

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph:
    """
    Parse whitespace-separated integer pairs, one edge per line.

    Lines starting with '#' and blank lines are skipped. Vertex labels are
    renumbered 0..n-1 in order of first appearance; edge ids follow input
    order after self-loops are dropped.
    """
    index: Dict[int, int] = {}
    edges: List[Edge] = []
    loops = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(line_number, f"expected 2 integers, got {len(tokens)} tokens")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(line_number, f"non-integer token in {line!r}") from None

        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        if u == v:
            loops += 1
            continue
        edges.append(Edge(len(edges), u, v))

    if loops:
        logger.warning("Dropped %d self-loop(s)", loops)

    labels = {v: label for label, v in index.items()}
    return Graph(range(len(index)), edges, labels=labels, loops_dropped=loops)


def read_edge_list(path: Union[str, Path]) -> Graph:
    """Read and parse an edge-list file; undecodable bytes raise ParseError."""
    data = Path(path).read_bytes()
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_number = data.count(b'\n', 0, e.start) + 1
        raise ParseError(line_number, f"invalid UTF-8 byte at offset {e.start}") from None
    return parse_edge_list(text)
