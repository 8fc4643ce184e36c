from collections.abc import Iterable
from dataclasses import dataclass

from app.core.exceptions import GraphOrderError, InvalidVertexError, SelfLoopError


@dataclass(frozen=True, slots=True)
class Graph:
    """Grafo simples não direcionado, imutável, com vértices 0..order-1."""

    order: int
    adjacency: tuple[frozenset[int], ...]
    size: int

    @property
    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> frozenset[int]:
        if not 0 <= v < self.order:
            raise InvalidVertexError(v, self.order)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in sorted(self.adjacency[u]) if u < v]

    def is_complete(self) -> bool:
        return all(len(a) == self.order - 1 for a in self.adjacency)

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {frozenset(e) for e in removed}
        return build_graph(self.order, [e for e in self.edges() if frozenset(e) not in drop])

    def with_edges(self, added: Iterable[tuple[int, int]]) -> "Graph":
        return build_graph(self.order, [*self.edges(), *added])

    def to_networkx(self):
        import networkx as nx

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.order))
        nx_graph.add_edges_from(self.edges())
        return nx_graph


def build_graph(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """
    Monta um Graph a partir de uma lista de arestas.
    Arestas repetidas (em qualquer orientação) são colapsadas.
    """
    if order < 0:
        raise GraphOrderError(f"negative order {order}")

    adjacency: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < order:
                raise InvalidVertexError(w, order)
        if u == v:
            raise SelfLoopError(u)
        adjacency[u].add(v)
        adjacency[v].add(u)

    size = sum(len(a) for a in adjacency) // 2
    return Graph(order=order, adjacency=tuple(frozenset(a) for a in adjacency), size=size)


@dataclass(frozen=True, slots=True)
class LayerDecomposition:
    source: int
    layers: tuple[tuple[int, ...], ...]

    @property
    def eccentricity(self) -> int:
        return len(self.layers) - 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(layer) for layer in self.layers)


@dataclass(frozen=True, slots=True)
class BipartiteCheck:
    is_bipartite: bool
    coloring: tuple[int, ...] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.is_bipartite
