"""Sunburst SVG drawing: 2-core on a circle, pruned trees on outer rings."""
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import drawsvg as draw

from config import (
    BACKGROUND_COLOR,
    PAGE_COLORS,
    SVG_INNER_RADIUS,
    SVG_MARGIN,
    SVG_OUTER_ARC_BULGE,
    SVG_RING_SPACING,
    SVG_VERTEX_RADIUS,
    TREE_EDGE_COLOR,
    VERTEX_COLORS,
)
from core.graph import Graph, two_core
from core.layout import BookEmbedding, CrossingReport


@dataclass(frozen=True)
class SunburstGeometry:
    size: float
    center: float
    positions: Dict[int, Tuple[float, float]]
    angles: Dict[int, float]
    depth: Dict[int, int]
    # Vertices on the inner circle, in layout order
    ring: Tuple[int, ...]


def sunburst_positions(g: Graph, emb: BookEmbedding) -> SunburstGeometry:
    """
    Deterministic coordinates for every vertex of g.

    Core vertices (and roots of whole-tree components) sit on the inner
    circle in layout order, starting at the top. Tree vertices at depth d
    sit on ring d; each subtree gets a wedge proportional to its leaf count
    inside its parent's wedge.
    """
    tc = two_core(g)
    core_like = set(tc.core.vertices) | set(tc.tree_roots)
    ring = tuple(v for v in emb.order if v in core_like)

    parent: Dict[int, int] = {}
    children: Dict[int, List[int]] = {}
    preorder: List[int] = []
    for attachment in sorted(tc.trees):
        tree = tc.trees[attachment]
        preorder.extend(tree.vertices)
        for v in tree.vertices:
            parent[v] = tree.parent[v]
            children.setdefault(tree.parent[v], []).append(v)

    leaves: Dict[int, int] = {}
    for v in reversed(preorder):
        leaves[v] = sum(leaves[c] for c in children.get(v, ())) or 1

    depth: Dict[int, int] = {v: 0 for v in ring}
    for v in preorder:
        depth[v] = depth[parent[v]] + 1
    max_depth = max(depth.values(), default=0)

    radius_outer = SVG_INNER_RADIUS + max_depth * SVG_RING_SPACING
    size = 2 * (radius_outer + SVG_MARGIN)
    center = size / 2

    angles: Dict[int, float] = {}
    wedge: Dict[int, Tuple[float, float]] = {}
    slot = 2 * math.pi / max(len(ring), 1)
    for i, v in enumerate(ring):
        theta = i * slot - math.pi / 2
        angles[v] = theta
        wedge[v] = (theta - slot / 2, theta + slot / 2)

    cursor = {v: wedge[v][0] for v in ring}
    for v in preorder:
        p = parent[v]
        lo, hi = wedge[p]
        total = sum(leaves[c] for c in children[p])
        width = (hi - lo) * leaves[v] / total
        start = cursor[p]
        cursor[p] = start + width
        wedge[v] = (start, start + width)
        cursor[v] = start
        angles[v] = start + width / 2

    positions: Dict[int, Tuple[float, float]] = {}
    for v, theta in angles.items():
        r = SVG_INNER_RADIUS + depth[v] * SVG_RING_SPACING
        positions[v] = (center + r * math.cos(theta), center + r * math.sin(theta))

    return SunburstGeometry(size, center, positions, angles, depth, ring)


def _outer_arc(geometry: SunburstGeometry, u: int, v: int) -> Tuple[float, float]:
    """Control point of a page-1 chord bowed outside the inner circle."""
    a, b = geometry.angles[u], geometry.angles[v]
    delta = (b - a) % (2 * math.pi)
    if delta > math.pi:
        delta -= 2 * math.pi
    mid = a + delta / 2
    r = SVG_INNER_RADIUS * (1 + SVG_OUTER_ARC_BULGE * (0.5 + abs(delta) / math.pi))
    return geometry.center + r * math.cos(mid), geometry.center + r * math.sin(mid)


def render_sunburst(g: Graph, emb: BookEmbedding, report: Optional[CrossingReport] = None) -> draw.Drawing:
    """Build the drawing; crossing counts go into a comment when a report is given."""
    geometry = sunburst_positions(g, emb)
    pos = geometry.positions
    d = draw.Drawing(geometry.size, geometry.size)
    d.append(draw.Rectangle(0, 0, geometry.size, geometry.size, fill=BACKGROUND_COLOR))
    if report is not None:
        d.append(draw.Raw(f"<!-- crossings {report.crossings} crossed-edges {report.crossed_count} -->"))

    d.append(draw.Circle(geometry.center, geometry.center, SVG_INNER_RADIUS,
                         fill="none", stroke="#D0D0D0", stroke_width=1))

    on_ring = set(geometry.ring)
    for edge in g.edges():
        (x1, y1), (x2, y2) = pos[edge.u], pos[edge.v]
        if edge.u not in on_ring or edge.v not in on_ring:
            d.append(draw.Line(x1, y1, x2, y2, stroke=TREE_EDGE_COLOR, stroke_width=1.2))
        elif emb.page[edge.id] == 0:
            d.append(draw.Line(x1, y1, x2, y2, stroke=PAGE_COLORS[0], stroke_width=1.5))
        else:
            cx, cy = _outer_arc(geometry, edge.u, edge.v)
            path = draw.Path(stroke=PAGE_COLORS[1], stroke_width=1.5, fill="none", stroke_dasharray="6,3")
            path.M(x1, y1).Q(cx, cy, x2, y2)
            d.append(path)

    for v, (x, y) in sorted(pos.items()):
        color = VERTEX_COLORS["core"] if v in on_ring else VERTEX_COLORS["tree"]
        d.append(draw.Circle(x, y, SVG_VERTEX_RADIUS, fill=color))
        if v in on_ring:
            d.append(draw.Text(str(g.label(v)), 10, x + SVG_VERTEX_RADIUS + 2, y - SVG_VERTEX_RADIUS - 2,
                               fill=VERTEX_COLORS["core"]))
    return d


def save_sunburst(g: Graph, emb: BookEmbedding, path: Path, report: Optional[CrossingReport] = None) -> None:
    """Render and write an SVG file."""
    render_sunburst(g, emb, report).save_svg(str(path))
