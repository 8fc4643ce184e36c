from collections import deque

from app.core.exceptions import DisconnectedGraphError, InvalidVertexError
from app.src.graphs.models import BipartiteCheck, Graph, LayerDecomposition


def _bfs_distances(g: Graph, source: int) -> list[int]:
    if not 0 <= source < g.order:
        raise InvalidVertexError(source, g.order)
    dist = [-1] * g.order
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.order == 0:
        return True
    return min(_bfs_distances(g, 0)) >= 0


def layer_decomposition(g: Graph, u: int) -> LayerDecomposition:
    """Camadas de distância a partir de u; cada camada em ordem crescente."""
    dist = _bfs_distances(g, u)
    unreachable = dist.count(-1)
    if unreachable:
        raise DisconnectedGraphError(u, unreachable)

    layers: list[list[int]] = [[] for _ in range(max(dist) + 1)]
    for v, k in enumerate(dist):
        layers[k].append(v)
    return LayerDecomposition(source=u, layers=tuple(tuple(layer) for layer in layers))


def distance_degrees(g: Graph, u: int) -> tuple[int, ...]:
    return layer_decomposition(g, u).sizes


def eccentricity(g: Graph, u: int) -> int:
    return layer_decomposition(g, u).eccentricity


def eccentricities(g: Graph) -> tuple[int, ...]:
    return tuple(eccentricity(g, u) for u in g.vertices)


def diameter(g: Graph) -> int:
    if g.order == 0:
        raise DisconnectedGraphError(0, 0)
    return max(eccentricities(g))


def peripheral_vertices(g: Graph) -> tuple[int, ...]:
    ecc = eccentricities(g)
    top = max(ecc)
    return tuple(v for v, e in enumerate(ecc) if e == top)


def _tree_path(parent: list[int], v: int) -> list[int]:
    path = [v]
    while parent[v] >= 0:
        v = parent[v]
        path.append(v)
    return path


def is_bipartite(g: Graph) -> BipartiteCheck:
    """
    2-coloração por BFS. Em caso de conflito devolve um ciclo ímpar formado
    pelos dois caminhos da árvore BFS até o ancestral comum mais a aresta.
    """
    color = [-1] * g.order
    parent = [-1] * g.order

    for root in g.vertices:
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(g.adjacency[v]):
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    left = _tree_path(parent, v)
                    right = _tree_path(parent, w)
                    common = set(left) & set(right)
                    left = left[: next(i for i, x in enumerate(left) if x in common) + 1]
                    right = right[: next(i for i, x in enumerate(right) if x in common)]
                    return BipartiteCheck(is_bipartite=False, odd_cycle=tuple(left + right[::-1]))

    return BipartiteCheck(is_bipartite=True, coloring=tuple(color))


def complement_edges(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in g.vertices for v in range(u + 1, g.order) if v not in g.adjacency[u]]
