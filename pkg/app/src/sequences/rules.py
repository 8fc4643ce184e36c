"""
Regras de admissibilidade das sequências de graus de distância.

Regras κ (vértice): A1 n_0 = 1, A2 soma n, A3 sem lacunas internas,
A4 n_i >= κ no interior, A5 n_d = 1.
Regras λ (aresta): B1..B3 como A1..A3, B4 n_i n_{i+1} >= λ,
B5 n_{i-1} + n_{i+1} >= λ, B6 n_d = 1.

`relax_last` desliga A5/B6: é o que vale para o vetor de qualquer vértice
periférico de um grafo da classe.
"""
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence, Violation


def _shape_violations(x: Sequence, c: ConstraintSet, prefix: str) -> list[Violation]:
    found = []
    if x.at(0) != 1:
        found.append(Violation(rule=f"{prefix}1", index=0))
    if x.total != c.n:
        found.append(Violation(rule=f"{prefix}2"))
    seen_zero = False
    for i in range(1, c.d + 1):
        if x.at(i) == 0:
            seen_zero = True
        elif seen_zero:
            found.append(Violation(rule=f"{prefix}3", index=i))
            break
    if len(x) != c.d + 1:
        found.append(Violation(rule="length", index=len(x) - 1))
    return found


def check_kappa(x: Sequence, c: ConstraintSet, relax_last: bool = False) -> list[Violation]:
    found = _shape_violations(x, c, "A")
    for i in range(1, c.d):
        if x.at(i) < c.level:
            found.append(Violation(rule="A4", index=i))
    if not relax_last and x.at(c.d) != 1:
        found.append(Violation(rule="A5", index=c.d))
    return found


def check_lambda(x: Sequence, c: ConstraintSet, relax_last: bool = False) -> list[Violation]:
    found = _shape_violations(x, c, "B")
    for i in range(c.d):
        if x.at(i) * x.at(i + 1) < c.level:
            found.append(Violation(rule="B4", index=i))
    for i in range(c.d + 1):
        if x.at(i - 1) + x.at(i + 1) < c.level:
            found.append(Violation(rule="B5", index=i))
    if not relax_last and x.at(c.d) != 1:
        found.append(Violation(rule="B6", index=c.d))
    return found


def check(x: Sequence, c: ConstraintSet, relax_last: bool = False) -> list[Violation]:
    if c.kind is ConnectivityKind.VERTEX:
        return check_kappa(x, c, relax_last)
    return check_lambda(x, c, relax_last)


def is_feasible(x: Sequence, c: ConstraintSet, relax_last: bool = False) -> bool:
    return not check(x, c, relax_last)
