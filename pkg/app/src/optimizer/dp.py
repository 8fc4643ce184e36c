"""
Programação dinâmica sobre (posições restantes, soma restante, anterior, atual).

A anterior só importa para B5 e é truncada em λ; para κ não importa.
O memo é global ao processo e compartilhado entre ordens e diâmetros.
"""
from functools import lru_cache

from app.core.exceptions import InfeasibleParametersError
from app.core.logger import get_logger
from app.src.optimizer.models import Optimum
from app.src.optimizer.transitions import closes, next_values
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence

logger = get_logger(__name__)

Suffixes = tuple[int, int, tuple[tuple[int, ...], ...]]


def _cap(kind: ConnectivityKind, level: int, value: int) -> int:
    return min(value, level) if kind is ConnectivityKind.EDGE else 0


@lru_cache(maxsize=None)
def _best_suffixes(
    kind: ConnectivityKind, level: int, k: int, remaining: int, prev: int, cur: int
) -> Suffixes | None:
    # (f do sufixo, g relativo do sufixo, sufixos empatados em ordem lexicográfica)
    if k == 0:
        if remaining == 0 and closes(kind, level, prev):
            return 0, 0, ((),)
        return None

    best: tuple[int, int] | None = None
    tails: list[tuple[int, ...]] = []
    for nxt in next_values(kind, level, k, prev, cur, remaining):
        sub = _best_suffixes(kind, level, k - 1, remaining - nxt, _cap(kind, level, cur), nxt)
        if sub is None:
            continue
        key = (cur * nxt + sub[0], remaining + sub[1])
        if best is None or key > best:
            best, tails = key, []
        if key == best:
            tails.extend((nxt, *t) for t in sub[2])

    if best is None:
        return None
    return best[0], best[1], tuple(tails)


@lru_cache(maxsize=None)
def _count(kind: ConnectivityKind, level: int, k: int, remaining: int, prev: int, cur: int) -> int:
    if k == 0:
        return int(remaining == 0 and closes(kind, level, prev))
    return sum(
        _count(kind, level, k - 1, remaining - nxt, _cap(kind, level, cur), nxt)
        for nxt in next_values(kind, level, k, prev, cur, remaining)
    )


def count_feasible(c: ConstraintSet) -> int:
    return _count(c.kind, c.level, c.d, c.n - 1, 0, 1)


def dp_optimum(c: ConstraintSet) -> Optimum:
    found = _best_suffixes(c.kind, c.level, c.d, c.n - 1, 0, 1)
    if found is None:
        raise InfeasibleParametersError(
            f"no admissible sequence for {c.label()}", kind=c.kind.value, level=c.level, n=c.n, d=c.d
        )

    f, g, tails = found
    unbeaten = [Sequence((1, *t)) for t in tails]
    logger.debug(f"DP {c.label()}: f={f} g={g} empatados={len(unbeaten)}")
    return Optimum(
        params=c,
        engine="dp",
        best=unbeaten[0],
        f=f,
        g=g,
        unbeaten=unbeaten,
        explored=count_feasible(c),
    )


def is_class_feasible(c: ConstraintSet) -> bool:
    return count_feasible(c) > 0
