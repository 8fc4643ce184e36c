from app.core.exceptions import MoveError
from app.src.optimizer.models import LocalSearchResult
from app.src.sequences.calculus import apply_moves, score
from app.src.sequences.models import ConstraintSet, Sequence
from app.src.sequences.rules import is_feasible


def local_search(x: Sequence, c: ConstraintSet, max_steps: int = 10_000) -> LocalSearchResult:
    """
    Subida pelo melhor vizinho: move uma unidade entre duas posições
    interiores enquanto a sequência continuar admissível e melhorar (f, g).
    Experimental; não garante o ótimo global.
    """
    current = x
    steps = 0
    while steps < max_steps:
        best = None
        for i in range(1, c.d):
            for j in range(1, c.d):
                if i == j:
                    continue
                try:
                    candidate = apply_moves(current, [(i, -1), (j, 1)])
                except MoveError:
                    continue
                if not is_feasible(candidate, c):
                    continue
                if score(candidate) > score(best or current):
                    best = candidate
        if best is None:
            break
        current = best
        steps += 1
    return LocalSearchResult(start=x, end=current, steps=steps)
