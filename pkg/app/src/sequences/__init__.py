from app.src.sequences.calculus import apply_moves, beats, f_value, g_value, score
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence, Violation
from app.src.sequences.rules import check, check_kappa, check_lambda, is_feasible

__all__ = [
    "ConnectivityKind",
    "ConstraintSet",
    "Sequence",
    "Violation",
    "apply_moves",
    "beats",
    "check",
    "check_kappa",
    "check_lambda",
    "f_value",
    "g_value",
    "is_feasible",
    "score",
]
