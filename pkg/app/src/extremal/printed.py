"""
Formas impressas das sequências extremais, transcritas literalmente.

Nada aqui é confiável por si só: as entradas vêm como Fraction e podem ser
não inteiras, nulas ou negativas. A verificação contra o otimizador fica em
`construction`.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor


@dataclass(frozen=True, slots=True)
class PrintedForm:
    branch: str
    entries: tuple[Fraction, ...]

    def rendered(self) -> list[str]:
        return [str(v) for v in self.entries]


def _form(branch: str, *entries) -> PrintedForm:
    return PrintedForm(branch=branch, entries=tuple(Fraction(v) for v in entries))


def _alternating(count: int) -> list[int]:
    return [1 if i % 2 == 0 else 2 for i in range(count)]


def _diameter_three(n: int, level: int, label: str) -> PrintedForm | None:
    if n < 2 * level + 2:
        return None
    half = Fraction(n - 2, 2)
    return _form(label, 1, floor(half), ceil(half), 1)


def printed_kappa_sequence(n: int, d: int, kappa: int) -> PrintedForm | None:
    if d == 3:
        return _diameter_three(n, kappa, "kappa d=3")
    if d >= 4 and n >= (d - 1) * kappa + 2:
        s = Fraction(n - (d - 3) * kappa - 2, 2)
        return _form("kappa d>=4", 1, *[kappa] * (d - 4), floor(s), ceil(s), kappa, 1)
    return None


def _lambda_diameter_four(n: int, lam: int) -> PrintedForm | None:
    if n < 3 * lam + 1:
        return None
    if n <= 4 * lam + 1:
        return _form("lambda d=4 narrow", 1, lam, n - 2 * lam - 2, lam, 1)
    if n % 2 == 0:
        return _form("lambda d=4 n even", 1, lam, Fraction(n - 4, 2), Fraction(n - 2 * lam, 2), 1)
    return _form("lambda d=4 n odd", 1, lam, Fraction(n - 3, 2), Fraction(n - lam - 1, 2), 1)


def _lambda_diameter_five(n: int, lam: int) -> PrintedForm | None:
    threshold = 4 * lam + 1 if lam == 2 else 4 * lam
    if n < threshold:
        return None
    half = Fraction(n - 2 * (lam + 1), 2)
    return _form("lambda d=5", 1, lam, floor(half), ceil(half), lam, 1)


def _lambda_two_long(n: int, d: int) -> PrintedForm | None:
    if 2 * n < 3 * (d + 1):
        return None
    if d % 2 == 1:
        q = Fraction(2 * n - 3 * d + 3, 4)
        return _form("lambda=2 d odd", *_alternating(d - 3), floor(q), ceil(q), 2, 1)
    if 2 * n - 3 * d + 4 == 6:
        return _form("lambda=2 d even alternating", *_alternating(d + 1))
    q = Fraction(2 * n - 3 * d - 4, 4)
    return _form("lambda=2 d even", *_alternating(d - 2), ceil(q), floor(q), 1)


def _lambda_three_four_long(n: int, d: int, lam: int) -> PrintedForm | None:
    if n < 3 * lam + 5:
        return None
    flexible = n - 2 * d - 3 * lam + 11
    if lam == 3:
        if flexible == 4:
            pair, branch = (2, 2), "lambda=3 sum=4"
        elif flexible % 2 == 1 and flexible >= 5:
            pair, branch = (Fraction(n - 2 * d + 1, 2), Fraction(n - 2 * d + 3, 2)), "lambda=3 sum odd"
        elif flexible % 2 == 0 and flexible >= 6:
            pair, branch = (Fraction(n - 2 * d, 2), Fraction(n - 2 * d + 4, 2)), "lambda=3 sum even"
        else:
            return None
    else:
        if flexible == 5:
            pair, branch = (2, 3), "lambda=4 sum=5"
        elif flexible % 2 == 1 and flexible >= 7:
            pair, branch = (Fraction(n - 2 * d - 20, 2), Fraction(n - 2 * d + 2, 2)), "lambda=4 sum odd"
        elif flexible % 2 == 0 and flexible >= 6:
            pair, branch = (Fraction(n - 2 * d - 3, 2), Fraction(n - 2 * d + 1, 2)), "lambda=4 sum even"
        else:
            return None
    return _form(branch, 1, lam, lam - 1, *[2] * (d - 6), *pair, lam, 1)


def printed_lambda_sequence(n: int, d: int, lam: int) -> PrintedForm | None:
    if d == 3:
        return _diameter_three(n, lam, "lambda d=3")
    if d == 4:
        return _lambda_diameter_four(n, lam)
    if d == 5:
        return _lambda_diameter_five(n, lam)
    if lam == 2:
        return _lambda_two_long(n, d)
    return _lambda_three_four_long(n, d, lam)
