"""Search objectives, results and the exploration budget."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from core.errors import ArgumentError, BudgetExceededError, SearchSizeError
from core.layout import BookEmbedding
from core.settings import SearchLimits


class Style(str, Enum):
    ONE_PAGE = "1page"
    TWO_PAGE = "2page"


class Measure(str, Enum):
    CROSSINGS = "crossings"
    CROSSED_EDGES = "crossed-edges"


class Objective(str, Enum):
    CROSSINGS_1P = "crossings-1p"
    CROSSED_1P = "crossed-1p"
    CROSSINGS_2P = "crossings-2p"
    CROSSED_2P = "crossed-2p"

    @classmethod
    def of(cls, style: str, measure: str) -> 'Objective':
        """Objective for a style/measure pair given as enum members or strings."""
        try:
            style, measure = Style(style), Measure(measure)
        except ValueError as e:
            raise ArgumentError(str(e)) from None
        short = "crossings" if measure is Measure.CROSSINGS else "crossed"
        suffix = "1p" if style is Style.ONE_PAGE else "2p"
        return cls(f"{short}-{suffix}")

    @property
    def style(self) -> Style:
        return Style.ONE_PAGE if self.value.endswith("1p") else Style.TWO_PAGE

    @property
    def measure(self) -> Measure:
        return Measure.CROSSINGS if self.value.startswith("crossings") else Measure.CROSSED_EDGES


@dataclass(frozen=True)
class BlockSummary:
    """Per-block sizes and value reported by the pipeline."""

    index: int
    vertices: int
    edges: int
    kernel_vertices: int
    kernel_edges: int
    value: int
    engine: str

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "vertices": self.vertices,
            "edges": self.edges,
            "kernel_vertices": self.kernel_vertices,
            "kernel_edges": self.kernel_edges,
            "value": self.value,
            "engine": self.engine,
        }


@dataclass(frozen=True)
class SearchResult:
    objective: Objective
    value: int
    layout: BookEmbedding
    explored: int
    wall_time: float
    blocks: Tuple[BlockSummary, ...] = field(default=())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "objective": self.objective.value,
            "value": self.value,
            "explored": self.explored,
            "wall_time": round(self.wall_time, 6),
            "blocks": [b.to_dict() for b in self.blocks],
        }


class ExplorationBudget:
    """Counts explored configurations and aborts once the limit is passed."""

    def __init__(self, limit: Optional[int] = None):
        self.limit = limit
        self.explored = 0

    def tick(self, amount: int = 1) -> None:
        self.explored += amount
        if self.limit is not None and self.explored > self.limit:
            raise BudgetExceededError(
                f"explored {self.explored} configurations, budget is {self.limit}",
                size=self.explored,
                limit=self.limit,
            )


def check_cap(what: str, size: int, cap: int, engine: str) -> None:
    """Raise SearchSizeError when an instance exceeds an engine cap."""
    if size > cap:
        raise SearchSizeError(f"{size} {what} exceeds the {engine} cap of {cap}", size=size, limit=cap)


def resolve_limits(limits: Optional[SearchLimits]) -> SearchLimits:
    return limits if limits is not None else SearchLimits()
