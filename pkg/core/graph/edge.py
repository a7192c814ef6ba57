"""Edge dataclass for undirected multigraph edges."""
from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class Edge:
    """
    An undirected edge with a stable integer id.

    Parallel edges share endpoints and are told apart by id.
    """

    id: int
    u: int
    v: int

    @property
    def endpoints(self) -> Tuple[int, int]:
        return (self.u, self.v)

    def other(self, vertex: int) -> int:
        """Get the endpoint opposite to the given one."""
        if self.u == vertex:
            return self.v
        if self.v == vertex:
            return self.u
        raise ValueError(f"Vertex {vertex} is not an endpoint of edge {self.id}")

    def __repr__(self) -> str:
        return f"Edge({self.id}: {self.u}-{self.v})"
