from typing import Literal

from app.config.settings import settings
from app.core.logger import get_logger
from app.src.optimizer.dp import count_feasible, dp_optimum, is_class_feasible
from app.src.optimizer.local import local_search
from app.src.optimizer.models import LocalSearchResult, Optimum
from app.src.optimizer.search import enumerate_sequences, naive_sequences, search_optimum
from app.src.sequences.models import ConstraintSet, Sequence

Engine = Literal["dp", "search"]

logger = get_logger(__name__)


def optimal_sequence(c: ConstraintSet, engine: Engine = "dp", jobs: int = 1) -> Optimum:
    if engine == "search" and c.n > settings.EXHAUSTIVE_MAX_ORDER:
        logger.warning(f"Busca exaustiva recusada acima do teto, usando DP: n={c.n} max={settings.EXHAUSTIVE_MAX_ORDER}")
    elif engine == "search":
        return search_optimum(c, jobs=jobs)
    return dp_optimum(c)


def unbeaten_unique(c: ConstraintSet) -> tuple[bool, list[Sequence]]:
    optimum = dp_optimum(c)
    return optimum.unique, optimum.unbeaten


__all__ = [
    "Engine",
    "LocalSearchResult",
    "Optimum",
    "count_feasible",
    "dp_optimum",
    "enumerate_sequences",
    "is_class_feasible",
    "local_search",
    "naive_sequences",
    "optimal_sequence",
    "search_optimum",
    "unbeaten_unique",
]
