"""
Fórmulas fechadas publicadas para o tamanho máximo, avaliadas exatamente.

Cada função devolve (rótulo da linha, valor) ou None quando nenhuma linha da
tabela cobre os parâmetros. Valores não inteiros são devolvidos como estão;
quem compara decide.
"""
from fractions import Fraction
from math import ceil, floor

ClosedForm = tuple[str, Fraction]

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def _diameter_three(n: int, level: int) -> ClosedForm | None:
    if n < 2 * level + 2:
        return None
    if n % 2 == 0:
        return "d=3 n even", Fraction(n * n - 4, 4)
    return "d=3 n odd", Fraction(n * n - 5, 4)


def kappa_closed_form(n: int, d: int, kappa: int) -> ClosedForm | None:
    if d == 3:
        return _diameter_three(n, kappa)
    if d >= 4 and n >= (d - 1) * kappa + 2:
        s = Fraction(n - (d - 3) * kappa - 2, 2)
        return "d>=4", Fraction((n - 2 * kappa) * kappa + ceil(s) * floor(s))
    return None


def _lambda_diameter_four(n: int, lam: int) -> ClosedForm | None:
    if n < 3 * lam + 1:
        return None
    if n <= Fraction(7 * lam, 2) + 2:
        return "d=4 narrow", Fraction(2 * (n - 2 * lam - 1) * lam)
    if n % 2 == 0:
        return "d=4 n even", Fraction(n * (n - 2), 4)
    return "d=4 n odd", Fraction((n - 1) ** 2, 4)


_DIAMETER_FIVE = {
    # λ: (limiar, ajuste n par, ajuste n ímpar)
    2: (9, 0, 6),
    3: (12, -3, 3),
    4: (16, -8, -2),
}


def _lambda_diameter_five(n: int, lam: int) -> ClosedForm | None:
    threshold, even_shift, odd_shift = _DIAMETER_FIVE[lam]
    if n < threshold:
        return None
    if n % 2 == 0:
        return f"d=5 lambda={lam} n even", Fraction((n + 2) ** 2, 4) + even_shift
    return f"d=5 lambda={lam} n odd", Fraction((n + 7) * (n - 3), 4) + odd_shift


def _lambda_long(n: int, d: int, lam: int) -> ClosedForm | None:
    if lam == 2:
        if n >= 10 and n % 2 == 0:
            q = Fraction(2 * n - 3 * d - 4, 4)
            lo, hi = floor(q), ceil(q)
            return "d>=6 lambda=2 n even", Fraction(2 * (d - 3) + lo + 2 * hi + lo * hi)
        if n >= 11 and n % 2 == 1:
            r = Fraction(2 * n - 3 * d + 3, 4)
            lo, hi = floor(r), ceil(r)
            return "d>=6 lambda=2 n odd", Fraction(2 * (d - 3) + 2 * (lo + hi) + lo * hi)
        return None

    if lam == 3:
        if n == 2 * d + 2:
            return "d>=6 lambda=3 n=2d+2", Fraction(2 * (2 * d + 1))
        if n >= 2 * d + 3 and n % 2 == 1:
            return "d>=6 lambda=3 n odd", (
                Fraction(5 * n - 13 - 2 * d, 2) + _QUARTER * (n - 2 * d + 1) * (n - 2 * d + 3)
            )
        if n >= 2 * d + 4 and n % 2 == 0:
            return "d>=6 lambda=3 n even", (
                Fraction(5 * n - 12 - 2 * d, 2) + _QUARTER * (n - 2 * d) * (n - 2 * d + 4)
            )
        return None

    if n == 2 * d + 6:
        return "d>=6 lambda=4 n=2d+6", Fraction(2 * (2 * d + 9))
    if n >= 2 * d + 7 and n % 2 == 1:
        return "d>=6 lambda=4 n odd", Fraction(3 * (n - 1) - 2 * d) + _QUARTER * (n - 2 * d - 3) * (n - 2 * d + 1)
    if n >= 2 * d + 8 and n % 2 == 0:
        return "d>=6 lambda=4 n even", Fraction(3 * (n - 6) - 2 * d) + _QUARTER * (n - 2 * d - 20) * (n - 2 * d + 2)
    return None


def lambda_closed_form(n: int, d: int, lam: int) -> ClosedForm | None:
    if lam not in (2, 3, 4):
        return None
    if d == 3:
        return _diameter_three(n, lam)
    if d == 4:
        return _lambda_diameter_four(n, lam)
    if d == 5:
        return _lambda_diameter_five(n, lam)
    return _lambda_long(n, d, lam)


def ore_plain(n: int, d: int) -> int:
    """Limite de Ore para grafos quaisquer de ordem n e diâmetro d."""
    return d + (n - d - 1) * (n - d + 4) // 2


def ore_kappa(n: int, d: int, kappa: int) -> int:
    value = (
        _HALF * d * kappa * (3 * kappa - 1)
        - 5 * kappa * kappa
        + 3 * kappa
        + _HALF * (n - 2 - (d - 2) * kappa) * (n - 3 - (d - 6) * kappa)
    )
    return int(value)
