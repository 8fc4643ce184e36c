from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from app.config.settings import settings
from app.core.exceptions import OracleCeilingError
from app.src.graphs.connectivity import is_k_connected, is_k_edge_connected
from app.src.graphs.metrics import diameter, is_connected
from app.src.graphs.models import Graph, build_graph
from app.src.oracle import bitsets
from app.src.sequences.models import ConnectivityKind, ConstraintSet


@dataclass(frozen=True, slots=True)
class GraphFilter:
    """Predicado sobre grafos conexos; min_degree é usado para podar cedo."""

    min_degree: int = 0
    diameter: int | None = None
    kind: ConnectivityKind | None = None
    level: int = 0

    @classmethod
    def from_constraints(cls, c: ConstraintSet) -> "GraphFilter":
        return cls(min_degree=c.level, diameter=c.d, kind=c.kind, level=c.level)

    def admits_sides(self, a: int, b: int) -> bool:
        return min(a, b) >= self.min_degree

    def admits_masks(self, adj: list[int]) -> bool:
        return all(mask.bit_count() >= self.min_degree for mask in adj)

    def accepts(self, g: Graph) -> bool:
        if g.min_degree() < self.min_degree:
            return False
        if self.diameter is not None and (not is_connected(g) or diameter(g) != self.diameter):
            return False
        if self.kind is ConnectivityKind.VERTEX:
            return is_k_connected(g, self.level)
        if self.kind is ConnectivityKind.EDGE:
            return is_k_edge_connected(g, self.level)
        return True


def check_ceiling(order: int) -> None:
    if order > settings.ORACLE_MAX_ORDER:
        raise OracleCeilingError(order, settings.ORACLE_MAX_ORDER)


def enumerate_connected_bipartite(order: int, graph_filter: GraphFilter | None = None) -> Iterator[Graph]:
    """
    Todo grafo bipartido conexo rotulado com `order` vértices, uma vez cada.
    A bipartição de um grafo conexo é única; fixamos o vértice 0 no lado A.
    """
    check_ceiling(order)
    graph_filter = graph_filter or GraphFilter()
    if order == 1:
        if graph_filter.min_degree == 0:
            yield build_graph(1, [])
        return

    full = (1 << order) - 1
    others = range(1, order)
    for size in range(0, order - 1):
        for chosen in combinations(others, size):
            side_a = (0, *chosen)
            side_b = tuple(v for v in others if v not in chosen)
            if not graph_filter.admits_sides(len(side_a), len(side_b)):
                continue
            candidates = [(u, v) for u in side_a for v in side_b]
            for subset in range(1, 1 << len(candidates)):
                adj = [0] * order
                for bit, (u, v) in enumerate(candidates):
                    if subset >> bit & 1:
                        adj[u] |= 1 << v
                        adj[v] |= 1 << u
                if not graph_filter.admits_masks(adj) or not bitsets.is_connected(adj, full):
                    continue
                g = build_graph(order, bitsets.edges_of(adj))
                if graph_filter.accepts(g):
                    yield g

