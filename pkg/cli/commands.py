"""Subcommand implementations; each returns the text written to standard output."""
import json
import logging
from pathlib import Path
from typing import List

from core.graph import Graph, biconnected_components, read_edge_list, stats
from core.layout import BookEmbedding, LayoutDocument, sweep_count
from core.search import Objective, kernel_for, solve
from .run_config import RunConfig
from .sunburst import save_sunburst

logger = logging.getLogger(__name__)

STATS_COLUMNS = ["name", "n", "m", "a", "k", "n2", "m2"]


def cmd_stats(config: RunConfig) -> str:
    """Size, cyclomatic and 2-core columns for one edge-list file."""
    g = read_edge_list(config.input)
    row = {"name": config.input.stem, **stats(g).to_dict()}
    if config.json_output:
        return json.dumps(row, indent=2)
    widths = [max(len(c), len(str(row[c]))) for c in STATS_COLUMNS]
    header = "  ".join(c.rjust(w) for c, w in zip(STATS_COLUMNS, widths))
    values = "  ".join(str(row[c]).rjust(w) for c, w in zip(STATS_COLUMNS, widths))
    return f"{header}\n{values}"


def cmd_solve(config: RunConfig) -> str:
    """Solve and write the layout JSON; returns the summary (or the JSON when no output path)."""
    g = read_edge_list(config.input)
    result = solve(g, config.style, config.objective, config.engine, config.limits())
    report = sweep_count(g, result.layout)
    document = result.layout.to_document(g, report)
    layout_json = document.model_dump_json(indent=2)

    kernels = ", ".join(
        f"block {b.index}: {b.kernel_vertices}v/{b.kernel_edges}e" for b in result.blocks if b.engine != "trivial"
    ) or "none"
    summary = (
        f"{result.objective.value} = {result.value}  "
        f"kernels [{kernels}]  explored {result.explored}  time {result.wall_time:.3f}s"
    )
    if config.json_output:
        payload = {**result.to_dict(), "layout": document.model_dump()}
        text = json.dumps(payload, indent=2)
        if config.output:
            config.output.write_text(text, encoding="utf-8")
            return summary
        return text
    if config.output:
        config.output.write_text(layout_json, encoding="utf-8")
        return summary
    return f"{layout_json}\n{summary}"


def cmd_kernel(config: RunConfig) -> str:
    """Kernel dump of every non-trivial block."""
    g = read_edge_list(config.input)
    build = kernel_for(Objective.of(config.style, config.objective))
    sections: List[str] = []
    for block in biconnected_components(g).blocks:
        if block.cyclomatic_number == 0:
            continue
        kernel = build(g.subgraph(block.vertices, block.edges))
        sections.append(f"# block {block.index}\n{kernel.dump()}")
    return "".join(sections).rstrip("\n") if sections else "# no cycles: every block is a bridge"


def load_layout(g: Graph, path: Path) -> BookEmbedding:
    """Read a layout JSON document for g."""
    document = LayoutDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    return BookEmbedding.from_document(g, document)


def cmd_render(config: RunConfig) -> str:
    """Draw a sunburst SVG from a layout file or a fresh solve."""
    g = read_edge_list(config.input)
    if config.solve:
        layout = solve(g, config.style, config.objective, config.engine, config.limits()).layout
    else:
        layout = load_layout(g, config.layout)
    report = sweep_count(g, layout)
    output = config.output or config.input.with_suffix(".svg")
    save_sunburst(g, layout, output, report)
    return f"wrote {output} ({report.crossings} crossings, {report.crossed_count} crossed edges)"
