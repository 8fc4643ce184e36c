"""Operações em grafos pequenos representados por máscaras de adjacência."""


def neighbourhood(adj: list[int], frontier: int) -> int:
    reached = 0
    while frontier:
        low = frontier & -frontier
        reached |= adj[low.bit_length() - 1]
        frontier ^= low
    return reached


def is_connected(adj: list[int], full: int) -> bool:
    seen = frontier = 1
    while frontier:
        frontier = neighbourhood(adj, frontier) & ~seen
        seen |= frontier
    return seen == full


def diameter(adj: list[int], full: int, limit: int) -> int | None:
    """
    Diâmetro por BFS de cada vértice; None se desconexo.
    Para cedo devolvendo limit + 1 quando alguma excentricidade passa de limit.
    """
    worst = 0
    for v in range(full.bit_length()):
        seen = frontier = 1 << v
        depth = 0
        while seen != full:
            frontier = neighbourhood(adj, frontier) & ~seen
            if not frontier:
                return None
            seen |= frontier
            depth += 1
            if depth > limit:
                return limit + 1
        worst = max(worst, depth)
    return worst


def edges_of(adj: list[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]
