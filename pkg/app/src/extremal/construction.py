"""
Sequências extremais verificadas.

A forma impressa só é aceita se for uma sequência admissível, inteira, e for
o único ótimo (f, g) encontrado pelo otimizador. Caso contrário o ótimo do
otimizador é usado e a substituição fica registrada com o motivo.
"""
from pydantic import BaseModel, ConfigDict, ValidationError

from app.core.exceptions import InfeasibleParametersError
from app.core.logger import get_logger
from app.src.extremal.printed import PrintedForm, printed_kappa_sequence, printed_lambda_sequence
from app.src.optimizer import dp_optimum, is_class_feasible
from app.src.optimizer.models import Optimum
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence
from app.src.sequences.rules import check

logger = get_logger(__name__)

SUPPORTED_LAMBDA = (2, 3, 4)


class ExtremalConstruction(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ConstraintSet
    sequence: Sequence
    branch: str | None = None
    printed: list[str] | None = None
    substituted: bool = False
    reason: str | None = None


def constraint_set(kind: ConnectivityKind | str, n: int, d: int, level: int) -> ConstraintSet:
    kind = ConnectivityKind(kind)
    if kind is ConnectivityKind.EDGE and level not in SUPPORTED_LAMBDA:
        raise InfeasibleParametersError(
            f"edge connectivity {level} outside supported range 2..4", kind=kind.value, level=level, n=n, d=d
        )
    try:
        return ConstraintSet(kind=kind, level=level, n=n, d=d)
    except ValidationError as e:
        raise InfeasibleParametersError(
            f"invalid parameters: {e.errors()[0]['msg']}", kind=kind.value, level=level, n=n, d=d
        ) from e


def _printed_rejection(form: PrintedForm | None, c: ConstraintSet, optimum: Optimum) -> str | None:
    if form is None:
        return "no printed branch covers these parameters"
    if any(v.denominator != 1 for v in form.entries):
        return "printed form has a non-integral entry"
    if any(v < 1 for v in form.entries):
        return "printed form has a non-positive entry"

    entries = tuple(int(v) for v in form.entries)
    if len(entries) != c.d + 1:
        return f"printed form has {len(entries)} entries, expected {c.d + 1}"
    if sum(entries) != c.n:
        return f"printed entries sum to {sum(entries)}, expected {c.n}"

    violations = check(Sequence(entries), c)
    if violations:
        return "printed form violates " + ", ".join(map(str, violations))
    if entries != optimum.best.root:
        return f"printed form is beaten by {optimum.best}"
    if not optimum.unique:
        return f"optimum is shared by {len(optimum.unbeaten)} sequences"
    return None


def _verified(c: ConstraintSet, form: PrintedForm | None) -> ExtremalConstruction:
    if not is_class_feasible(c):
        raise InfeasibleParametersError(
            f"no admissible sequence for {c.label()}", kind=c.kind.value, level=c.level, n=c.n, d=c.d
        )

    optimum = dp_optimum(c)
    reason = _printed_rejection(form, c, optimum)
    if reason is not None:
        logger.info(f"Forma impressa substituída: {c.label()} motivo='{reason}' usando={optimum.best}")

    return ExtremalConstruction(
        params=c,
        sequence=optimum.best,
        branch=form.branch if form else None,
        printed=form.rendered() if form else None,
        substituted=reason is not None,
        reason=reason,
    )


def kappa_construction(n: int, d: int, kappa: int) -> ExtremalConstruction:
    c = constraint_set(ConnectivityKind.VERTEX, n, d, kappa)
    return _verified(c, printed_kappa_sequence(n, d, kappa))


def lambda_construction(n: int, d: int, lam: int) -> ExtremalConstruction:
    c = constraint_set(ConnectivityKind.EDGE, n, d, lam)
    return _verified(c, printed_lambda_sequence(n, d, lam))


def construction(c: ConstraintSet) -> ExtremalConstruction:
    if c.kind is ConnectivityKind.VERTEX:
        return kappa_construction(c.n, c.d, c.level)
    return lambda_construction(c.n, c.d, c.level)


def kappa_sequence(n: int, d: int, kappa: int) -> Sequence:
    return kappa_construction(n, d, kappa).sequence


def lambda_sequence(n: int, d: int, lam: int) -> Sequence:
    return lambda_construction(n, d, lam).sequence


def minimum_feasible_order(kind: ConnectivityKind | str, level: int, d: int) -> int:
    """Menor n com classe admissível; (1, ℓ, ..., ℓ, 1) sempre serve, então a busca termina."""
    kind = ConnectivityKind(kind)
    for n in range(d + 1, (d - 1) * level + 3):
        if is_class_feasible(ConstraintSet(kind=kind, level=level, n=n, d=d)):
            return n
    return (d - 1) * level + 2

