"""
Motores exaustivos: enumeração ordenada, varredura ingênua (oráculo dos
testes) e branch-and-bound particionado por (n_1, n_2), opcionalmente em
processos paralelos.
"""
from collections.abc import Iterator
from itertools import combinations
from multiprocessing import Pool

from app.core.exceptions import InfeasibleParametersError
from app.core.logger import get_logger
from app.src.optimizer.models import Optimum
from app.src.optimizer.transitions import closes, next_values
from app.src.sequences.calculus import score
from app.src.sequences.models import ConstraintSet, Sequence
from app.src.sequences.rules import is_feasible

logger = get_logger(__name__)


def enumerate_sequences(c: ConstraintSet, relax_last: bool = False) -> Iterator[Sequence]:
    """Todas as sequências admissíveis, em ordem lexicográfica, cada uma uma vez."""
    prefix = [1]

    def extend(prev: int, cur: int, remaining: int) -> Iterator[Sequence]:
        k = c.d + 1 - len(prefix)
        if k == 0:
            if remaining == 0 and closes(c.kind, c.level, prev):
                yield Sequence(tuple(prefix))
            return
        for nxt in next_values(c.kind, c.level, k, prev, cur, remaining, relax_last):
            prefix.append(nxt)
            yield from extend(cur, nxt, remaining - nxt)
            prefix.pop()

    yield from extend(0, 1, c.n - 1)


def naive_sequences(c: ConstraintSet) -> Iterator[Sequence]:
    """Composições de n em d+1 partes filtradas pelo verificador de regras."""
    for cuts in combinations(range(1, c.n), c.d):
        bounds = (0, *cuts, c.n)
        x = Sequence(tuple(b - a for a, b in zip(bounds, bounds[1:])))
        if is_feasible(x, c):
            yield x


class _Best:
    __slots__ = ("key", "tails", "explored")

    def __init__(self):
        self.key: tuple[int, int] | None = None
        self.tails: list[tuple[int, ...]] = []
        self.explored = 0

    def offer(self, entries: tuple[int, ...]) -> None:
        self.explored += 1
        key = score(entries)
        if self.key is None or key > self.key:
            self.key, self.tails = key, []
        if key == self.key:
            self.tails.append(entries)


def _search_partition(job: tuple[ConstraintSet, int, int]) -> tuple[tuple[int, int] | None, list[tuple[int, ...]], int]:
    c, n1, n2 = job
    best = _Best()
    prefix = [1, n1, n2]

    def descend(partial_f: int, prev: int, cur: int, remaining: int) -> None:
        k = c.d + 1 - len(prefix)
        if k == 0:
            if remaining == 0 and closes(c.kind, c.level, prev):
                best.offer(tuple(prefix))
            return
        # o restante contribui no máximo cur*R + R^2/4
        if best.key is not None and partial_f + cur * remaining + remaining * remaining // 4 < best.key[0]:
            return
        for nxt in next_values(c.kind, c.level, k, prev, cur, remaining):
            prefix.append(nxt)
            descend(partial_f + cur * nxt, cur, nxt, remaining - nxt)
            prefix.pop()

    descend(n1 + n1 * n2, n1, n2, c.n - 1 - n1 - n2)
    return best.key, best.tails, best.explored


def _partitions(c: ConstraintSet) -> list[tuple[ConstraintSet, int, int]]:
    jobs = []
    for n1 in next_values(c.kind, c.level, c.d, 0, 1, c.n - 1):
        for n2 in next_values(c.kind, c.level, c.d - 1, 1, n1, c.n - 1 - n1):
            jobs.append((c, n1, n2))
    return jobs


def search_optimum(c: ConstraintSet, jobs: int = 1) -> Optimum:
    partitions = _partitions(c)
    if jobs > 1 and len(partitions) > 1:
        with Pool(processes=jobs) as pool:
            results = pool.map(_search_partition, partitions)
    else:
        results = [_search_partition(p) for p in partitions]

    merged = _Best()
    for key, tails, explored in results:
        merged.explored += explored
        if key is None:
            continue
        if merged.key is None or key > merged.key:
            merged.key, merged.tails = key, []
        if key == merged.key:
            merged.tails.extend(tails)

    if merged.key is None:
        raise InfeasibleParametersError(
            f"no admissible sequence for {c.label()}", kind=c.kind.value, level=c.level, n=c.n, d=c.d
        )

    unbeaten = [Sequence(t) for t in sorted(merged.tails)]
    logger.debug(f"Busca {c.label()}: particoes={len(partitions)} jobs={jobs} explorados={merged.explored}")
    return Optimum(
        params=c,
        engine="search",
        best=unbeaten[0],
        f=merged.key[0],
        g=merged.key[1],
        unbeaten=unbeaten,
        explored=merged.explored,
    )
