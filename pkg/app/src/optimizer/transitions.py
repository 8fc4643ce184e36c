from app.src.sequences.models import ConnectivityKind


def next_values(
    kind: ConnectivityKind,
    level: int,
    k: int,
    prev: int,
    cur: int,
    remaining: int,
    relax_last: bool = False,
) -> range:
    """
    Valores admissíveis para a próxima entrada.

    k é o número de posições ainda a preencher (incluindo a próxima),
    prev/cur são as duas últimas entradas e remaining o que falta somar.
    Toda regra local que envolve a próxima entrada é verificada aqui, de modo
    que um prefixo só cresce se continuar admissível.
    """
    if k < 1 or remaining < k:
        return range(0)

    if kind is ConnectivityKind.VERTEX:
        low = level if k > 1 else 1
    else:
        # B4 com a entrada atual e B5 centrado na entrada atual
        low = max(1, -(-level // cur), level - prev)

    if k == 1:
        value = remaining
        if value < low or (not relax_last and value != 1):
            return range(0)
        return range(value, value + 1)
    return range(low, remaining - k + 2)


def closes(kind: ConnectivityKind, level: int, prev: int) -> bool:
    """B5 na última posição: n_{d-1} + 0 >= λ."""
    return kind is ConnectivityKind.VERTEX or prev >= level
