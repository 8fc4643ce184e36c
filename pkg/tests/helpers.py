from itertools import combinations

from hypothesis import strategies as st

from app.src.graphs import Graph, build_graph, is_connected
from app.src.sequences import ConnectivityKind, ConstraintSet, Sequence


@st.composite
def graphs(draw: st.DrawFn, min_order: int = 2, max_order: int = 8) -> Graph:
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = list(combinations(range(order), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return build_graph(order, chosen)


@st.composite
def connected_bipartite_graphs(draw: st.DrawFn, min_order: int = 2, max_order: int = 8) -> Graph:
    """Árvore aleatória com cores alternadas mais arestas extras entre as duas cores."""
    order = draw(st.integers(min_value=min_order, max_value=max_order))
    color = [0] * order
    edges = []
    for v in range(1, order):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        color[v] = 1 - color[parent]
        edges.append((parent, v))
    cross = [(u, v) for u, v in combinations(range(order), 2) if color[u] != color[v]]
    edges += draw(st.lists(st.sampled_from(cross), unique=True)) if cross else []
    return build_graph(order, edges)


@st.composite
def layered_sequences(draw: st.DrawFn, min_d: int = 1, max_d: int = 6, max_entry: int = 4) -> Sequence:
    """Sequências com n_0 = n_d = 1 e miolo positivo."""
    d = draw(st.integers(min_value=min_d, max_value=max_d))
    middle = draw(st.lists(st.integers(min_value=1, max_value=max_entry), min_size=d - 1, max_size=d - 1))
    return Sequence((1, *middle, 1))


def brute_vertex_connectivity(g: Graph) -> int:
    if g.is_complete():
        return g.order - 1
    for k in range(g.order):
        for removed in combinations(range(g.order), k):
            kept = [v for v in g.vertices if v not in removed]
            relabel = {v: i for i, v in enumerate(kept)}
            sub = build_graph(len(kept), [(relabel[u], relabel[v]) for u, v in g.edges() if u in relabel and v in relabel])
            if not is_connected(sub):
                return k
    return g.order - 1


def brute_edge_connectivity(g: Graph) -> int:
    # menor corte sobre todos os lados S com 0 em S; um grafo desconexo tem corte vazio
    others = range(1, g.order)
    best = g.size
    for k in range(0, g.order - 1):
        for chosen in combinations(others, k):
            side = {0, *chosen}
            best = min(best, sum(1 for u, v in g.edges() if (u in side) != (v in side)))
    return best


def kappa(level: int, n: int, d: int) -> ConstraintSet:
    return ConstraintSet(kind=ConnectivityKind.VERTEX, level=level, n=n, d=d)


def lam(level: int, n: int, d: int) -> ConstraintSet:
    return ConstraintSet(kind=ConnectivityKind.EDGE, level=level, n=n, d=d)

