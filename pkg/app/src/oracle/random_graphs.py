import random
from functools import lru_cache

from app.config.settings import settings
from app.core.exceptions import GenerationBudgetError, InfeasibleParametersError
from app.core.logger import get_logger
from app.src.graphs.models import Graph
from app.src.oracle.enumeration import GraphFilter
from app.src.optimizer import enumerate_sequences
from app.src.sequences.models import ConstraintSet, Sequence
from app.src.witness import sequential_sum

logger = get_logger(__name__)


@lru_cache(maxsize=256)
def _feasible_sequences(c: ConstraintSet) -> tuple[Sequence, ...]:
    return tuple(enumerate_sequences(c))


def random_constrained_graph(c: ConstraintSet, seed: int | None = None, budget: int | None = None) -> Graph:
    """
    Escolhe X admissível ao acaso, monta G(X) e apaga arestas aleatórias
    enquanto o grafo continuar na classe (diâmetro exato e conectividade).
    Mesma semente, mesmo grafo.
    """
    rng = random.Random(settings.RANDOM_SEED if seed is None else seed)
    budget = budget or settings.RANDOM_RETRY_BUDGET
    graph_filter = GraphFilter.from_constraints(c)

    sequences = _feasible_sequences(c)
    if not sequences:
        raise InfeasibleParametersError(
            f"no admissible sequence for {c.label()}", kind=c.kind.value, level=c.level, n=c.n, d=c.d
        )

    attempts = 0
    current = None
    while current is None:
        if attempts >= budget:
            raise GenerationBudgetError(attempts)
        attempts += 1
        candidate = sequential_sum(rng.choice(sequences))
        if graph_filter.accepts(candidate):
            current = candidate

    target = rng.randint(0, current.size - (c.n - 1))
    removed = 0
    while removed < target and attempts < budget:
        edges = current.edges()
        rng.shuffle(edges)
        for edge in edges:
            attempts += 1
            candidate = current.without_edges([edge])
            if graph_filter.accepts(candidate):
                current = candidate
                removed += 1
                break
            if attempts >= budget:
                break
        else:
            # nenhuma aresta pode sair sem violar a classe
            break

    logger.debug(f"Grafo aleatório {c.label()} seed={seed}: m={current.size} removidas={removed} tentativas={attempts}")
    return current
