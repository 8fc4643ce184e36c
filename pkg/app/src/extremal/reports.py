import csv
import io
from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict

from app.core.exceptions import InfeasibleParametersError
from app.core.logger import get_logger
from app.src.extremal.closed_forms import kappa_closed_form, lambda_closed_form, ore_kappa, ore_plain
from app.src.extremal.construction import (
    ExtremalConstruction,
    constraint_set,
    kappa_construction,
    lambda_construction,
)
from app.src.sequences.calculus import f_value
from app.src.sequences.models import ConnectivityKind, ConstraintSet, Sequence

logger = get_logger(__name__)


class Baselines(BaseModel):
    model_config = ConfigDict(frozen=True)

    ore_plain: int
    ore_kappa: int | None = None


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: ConstraintSet
    feasible: bool = True
    extremal_sequence: Sequence | None = None
    bound: int | None = None
    closed_form: int | None = None
    closed_form_row: str | None = None
    closed_form_agrees: bool = False
    baselines: Baselines
    substituted: bool = False
    substitution_reason: str | None = None
    printed_sequence: list[str] | None = None


def baseline_bounds(n: int, d: int, kappa: int | None = None) -> Baselines:
    if d < 1 or n < d + 1:
        raise InfeasibleParametersError(f"order {n} too small for diameter {d}", n=n, d=d)
    if kappa is not None and kappa < 2:
        raise InfeasibleParametersError(f"connectivity {kappa} below 2", n=n, d=d, kappa=kappa)

    with_kappa = ore_kappa(n, d, kappa) if kappa is not None and d >= 4 else None
    return Baselines(ore_plain=ore_plain(n, d), ore_kappa=with_kappa)


def _report(built: ExtremalConstruction, closed, baselines: Baselines) -> BoundReport:
    bound = f_value(built.sequence)
    row, value = closed if closed else (None, None)
    integral = value is not None and value.denominator == 1
    return BoundReport(
        params=built.params,
        extremal_sequence=built.sequence,
        bound=bound,
        closed_form=int(value) if integral else None,
        closed_form_row=row,
        closed_form_agrees=integral and int(value) == bound,
        baselines=baselines,
        substituted=built.substituted,
        substitution_reason=built.reason,
        printed_sequence=built.printed,
    )


def bound_report_kappa(n: int, d: int, kappa: int) -> BoundReport:
    built = kappa_construction(n, d, kappa)
    return _report(built, kappa_closed_form(n, d, kappa), baseline_bounds(n, d, kappa))


def bound_report_lambda(n: int, d: int, lam: int) -> BoundReport:
    built = lambda_construction(n, d, lam)
    return _report(built, lambda_closed_form(n, d, lam), baseline_bounds(n, d))


def bound_report(c: ConstraintSet) -> BoundReport:
    if c.kind is ConnectivityKind.VERTEX:
        return bound_report_kappa(c.n, c.d, c.level)
    return bound_report_lambda(c.n, c.d, c.level)


def bound_grid(
    kind: ConnectivityKind | str, level: int, orders: Iterable[int], diameters: Iterable[int]
) -> list[BoundReport]:
    """Relatórios para cada (n, d) da grade; pontos inviáveis entram com feasible=False."""
    orders = list(orders)
    reports = []
    for d in diameters:
        for n in orders:
            if n < d + 1:
                continue
            c = constraint_set(kind, n, d, level)
            try:
                reports.append(bound_report(c))
            except InfeasibleParametersError:
                logger.debug(f"Ponto inviável na grade: {c.label()}")
                reports.append(BoundReport(params=c, feasible=False, baselines=baseline_bounds(n, d)))
    return reports


class DiscrepancyRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    d: int
    level: int
    kind: ConnectivityKind
    feasible: bool
    bound: int | None = None
    closed_form: int | None = None
    closed_form_row: str | None = None
    agrees: bool = False
    substituted: bool = False
    oracle: int | None = None
    oracle_agrees: bool | None = None

    @property
    def flagged(self) -> bool:
        if not self.feasible:
            return False
        closed_form_mismatch = self.closed_form_row is not None and not self.agrees
        return closed_form_mismatch or self.substituted or self.oracle_agrees is False


def discrepancy_row(report: BoundReport, oracle_max: int | None = None, oracle_run: bool = False) -> DiscrepancyRow:
    c = report.params
    return DiscrepancyRow(
        n=c.n,
        d=c.d,
        level=c.level,
        kind=c.kind,
        feasible=report.feasible,
        bound=report.bound,
        closed_form=report.closed_form,
        closed_form_row=report.closed_form_row,
        agrees=report.closed_form_agrees,
        substituted=report.substituted,
        oracle=oracle_max,
        oracle_agrees=(oracle_max == report.bound) if oracle_run else None,
    )


CSV_FIELDS = ("n", "d", "level", "kind", "feasible", "bound", "closed_form", "agrees", "substituted", "oracle")


def discrepancy_csv(rows: Iterable[DiscrepancyRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for row in rows:
        data = row.model_dump(mode="json")
        writer.writerow(["" if data[k] is None else data[k] for k in CSV_FIELDS])
    return buffer.getvalue()


class DiscrepancyTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    rows: list[DiscrepancyRow]

    @property
    def flagged(self) -> list[DiscrepancyRow]:
        return [row for row in self.rows if row.flagged]
