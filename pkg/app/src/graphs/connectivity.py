"""
Conectividade por vértices e por arestas via fluxo máximo com capacidades
unitárias (caminhos aumentantes por BFS).

Os locais seguem Menger: número máximo de caminhos internamente disjuntos
(ou disjuntos em arestas) entre s e t. A redução global por vértices usa o
vértice de grau mínimo e os pares de vizinhos dele.
"""
from collections import deque
from itertools import combinations

from app.core.exceptions import GraphError, GraphOrderError, InvalidVertexError
from app.src.graphs.metrics import is_connected
from app.src.graphs.models import Graph

_INF = 1 << 30

Network = dict[int, dict[int, int]]


def _add_arc(net: Network, a: int, b: int, capacity: int) -> None:
    net.setdefault(a, {})
    net.setdefault(b, {})
    net[a][b] = net[a].get(b, 0) + capacity
    net[b].setdefault(a, 0)


def _max_flow(net: Network, source: int, sink: int, cutoff: int | None = None) -> int:
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, cap in net[a].items():
                if cap > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break

        bottleneck = _INF
        b = sink
        while b != source:
            a = parent[b]
            bottleneck = min(bottleneck, net[a][b])
            b = a
        b = sink
        while b != source:
            a = parent[b]
            net[a][b] -= bottleneck
            net[b][a] += bottleneck
            b = a
        flow += bottleneck
    return flow


def _check_pair(g: Graph, s: int, t: int) -> None:
    for v in (s, t):
        if not 0 <= v < g.order:
            raise InvalidVertexError(v, g.order)
    if s == t:
        raise GraphError(f"source and target coincide ({s})")


def local_vertex_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    """Caminhos s-t internamente disjuntos; s e t não podem ser adjacentes."""
    _check_pair(g, s, t)
    if g.has_edge(s, t):
        raise GraphError(f"vertices {s} and {t} are adjacent")

    # v_in = 2v, v_out = 2v + 1
    net: Network = {}
    for v in g.vertices:
        _add_arc(net, 2 * v, 2 * v + 1, _INF if v in (s, t) else 1)
    for u, v in g.edges():
        _add_arc(net, 2 * u + 1, 2 * v, _INF)
        _add_arc(net, 2 * v + 1, 2 * u, _INF)
    return _max_flow(net, 2 * s + 1, 2 * t, cutoff)


def local_edge_connectivity(g: Graph, s: int, t: int, cutoff: int | None = None) -> int:
    _check_pair(g, s, t)
    net: Network = {v: {} for v in g.vertices}
    for u, v in g.edges():
        _add_arc(net, u, v, 1)
        _add_arc(net, v, u, 1)
    return _max_flow(net, s, t, cutoff)


def _require_order(g: Graph) -> None:
    if g.order < 2:
        raise GraphOrderError(f"connectivity needs at least 2 vertices, got {g.order}")


def vertex_connectivity(g: Graph, cutoff: int | None = None) -> int:
    """
    κ(G). Grafo completo devolve n-1, desconexo devolve 0.
    Com cutoff, para assim que o valor atinge o limite (útil para testes k-conexos).
    """
    _require_order(g)
    if not is_connected(g):
        return 0
    if g.is_complete():
        return g.order - 1

    v = min(g.vertices, key=g.degree)
    best = g.degree(v)
    if cutoff is not None:
        best = min(best, cutoff)

    others = [w for w in g.vertices if w != v and not g.has_edge(v, w)]
    for w in others:
        best = min(best, local_vertex_connectivity(g, v, w, cutoff=best))
    for x, y in combinations(sorted(g.neighbors(v)), 2):
        if g.has_edge(x, y):
            continue
        best = min(best, local_vertex_connectivity(g, x, y, cutoff=best))
    return best


def edge_connectivity(g: Graph, cutoff: int | None = None) -> int:
    _require_order(g)
    if not is_connected(g):
        return 0

    best = g.min_degree()
    if cutoff is not None:
        best = min(best, cutoff)
    for t in range(1, g.order):
        best = min(best, local_edge_connectivity(g, 0, t, cutoff=best))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if g.order <= k:
        return False
    return vertex_connectivity(g, cutoff=k) >= k


def is_k_edge_connected(g: Graph, k: int) -> bool:
    if g.order < 2:
        return k <= 0
    return edge_connectivity(g, cutoff=k) >= k
