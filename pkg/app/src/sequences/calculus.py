from collections.abc import Iterable

from app.core.exceptions import MoveError
from app.src.sequences.models import Sequence


def f_value(x: Iterable[int]) -> int:
    """Soma dos produtos de entradas consecutivas: tamanho de G(X)."""
    entries = tuple(x)
    return sum(a * b for a, b in zip(entries, entries[1:]))


def g_value(x: Iterable[int]) -> int:
    """Soma ponderada pelo índice, usada como desempate."""
    return sum(i * v for i, v in enumerate(x))


def score(x: Iterable[int]) -> tuple[int, int]:
    entries = tuple(x)
    return f_value(entries), g_value(entries)


def beats(a: Sequence, b: Sequence) -> bool:
    return score(a) > score(b)


def apply_moves(x: Sequence, moves: Iterable[tuple[int, int]]) -> Sequence:
    """
    Aplica deltas (índice, delta) simultaneamente.
    Índices fora da sequência ou entradas resultantes < 1 são rejeitados.
    """
    entries = list(x)
    for index, delta in moves:
        if not 0 <= index < len(entries):
            raise MoveError(f"index {index} outside 0..{len(entries) - 1}")
        entries[index] += delta
    for index, value in enumerate(entries):
        if value < 1:
            raise MoveError(f"entry {index} would become {value}")
    return Sequence(tuple(entries))
