"""
G(X): soma sequencial de grafos vazios. O bloco i ocupa rótulos
consecutivos e cada vértice dele é ligado a todos os blocos i-1 e i+1.
"""
from itertools import accumulate

from app.core.exceptions import NotBipartiteError, SequenceError
from app.src.graphs.metrics import complement_edges, diameter, is_bipartite, layer_decomposition, peripheral_vertices
from app.src.graphs.models import Graph, build_graph
from app.src.sequences.models import Sequence


def block_ranges(x: Sequence) -> list[range]:
    ends = list(accumulate(x))
    return [range(end - size, end) for size, end in zip(x, ends)]


def sequential_sum(x: Sequence) -> Graph:
    if len(x) == 0:
        raise SequenceError("empty sequence has no sequential sum")
    blocks = block_ranges(x)
    edges = [(u, v) for left, right in zip(blocks, blocks[1:]) for u in left for v in right]
    return build_graph(x.total, edges)


def _is_full_join(g: Graph, layers: tuple[tuple[int, ...], ...]) -> bool:
    for i, layer in enumerate(layers):
        expected = set(layers[i - 1]) if i > 0 else set()
        if i + 1 < len(layers):
            expected |= set(layers[i + 1])
        if any(g.adjacency[v] != expected for v in layer):
            return False
    return True


def layered_form(g: Graph) -> Sequence | None:
    """
    Devolve X(u) se G for exatamente G(X(u)) para algum vértice periférico u
    com n_0 = n_d = 1; None caso contrário.
    """
    check = is_bipartite(g)
    if not check:
        raise NotBipartiteError(f"graph has odd cycle {check.odd_cycle}")

    for u in peripheral_vertices(g):
        decomposition = layer_decomposition(g, u)
        if decomposition.sizes[-1] != 1:
            continue
        if _is_full_join(g, decomposition.layers):
            return Sequence(decomposition.sizes)
    return None


def is_diameter_critical(g: Graph) -> bool:
    """
    Verificação direta: toda aresta ausente entre as duas classes de cor
    deve reduzir o diâmetro. Quadrático em cálculos de diâmetro; só para testes.
    """
    check = is_bipartite(g)
    if not check:
        raise NotBipartiteError(f"graph has odd cycle {check.odd_cycle}")

    current = diameter(g)
    color = check.coloring
    for u, v in complement_edges(g):
        if color[u] == color[v]:
            continue
        if diameter(g.with_edges([(u, v)])) >= current:
            return False
    return True
