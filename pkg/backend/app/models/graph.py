# backend/app/models/graph.py
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Tuple

import networkx as nx

from app.utils.errors import InvalidArgumentError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1 with sorted neighbor lists."""

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise InvalidArgumentError("adjacency must have one entry per vertex")

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Freeze an undirected networkx graph whose nodes are exactly 0..n-1."""
        if graph.is_directed() or graph.is_multigraph():
            raise InvalidArgumentError("expected a simple undirected graph")
        n = graph.number_of_nodes()
        if set(graph.nodes) != set(range(n)):
            raise InvalidArgumentError(f"nodes must be labelled 0..{n - 1}")
        if nx.number_of_selfloops(graph):
            raise InvalidArgumentError("self-loops are not allowed")
        return cls(n, tuple(tuple(sorted(graph.adj[v])) for v in range(n)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if vertex_count < 0:
            raise InvalidArgumentError("vertex count must be nonnegative")
        graph = nx.empty_graph(vertex_count)
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidArgumentError(f"edge ({u}, {v}) has a vertex outside 0..{vertex_count - 1}")
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if graph.has_edge(u, v):
                raise InvalidArgumentError(f"duplicate edge ({u}, {v})")
            graph.add_edge(u, v)
        return cls.from_networkx(graph)

    def to_networkx(self) -> nx.Graph:
        graph = nx.empty_graph(self.vertex_count)
        graph.add_edges_from(self.edges())
        return graph

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Neighborhoods as bitmasks (bit u set iff u is adjacent); built on first use."""
        masks = []
        for neighbors in self.adjacency:
            mask = 0
            for u in neighbors:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.vertex_count) for v in self.adjacency[u] if u < v]
