"""Formatação em texto dos relatórios; o formato JSON vem direto dos modelos."""
from pydantic import BaseModel

from app.src.extremal.reports import BoundReport, DiscrepancyRow
from app.src.oracle.max_size import OracleResult
from app.src.witness.validation import ValidationReport


def as_json(model: BaseModel) -> str:
    return model.model_dump_json(indent=2)


def bound_text(report: BoundReport) -> str:
    c = report.params
    lines = [
        f"params {c.label()}",
        f"bound {report.bound}",
        f"sequence {report.extremal_sequence}",
    ]
    if report.closed_form_row is None:
        lines.append("closed_form none")
    else:
        state = "agrees" if report.closed_form_agrees else "DISAGREES"
        lines.append(f"closed_form {report.closed_form} [{report.closed_form_row}] {state}")
    if report.substituted:
        lines.append(f"substituted {report.substitution_reason}")
    lines.append(f"ore_plain {report.baselines.ore_plain}")
    if report.baselines.ore_kappa is not None:
        lines.append(f"ore_kappa {report.baselines.ore_kappa}")
    return "\n".join(lines)


def validation_text(report: ValidationReport) -> str:
    flags = ("order_ok", "bipartite_ok", "diameter_ok", "connectivity_ok", "size_ok")
    lines = [f"params {report.params.label()}"]
    lines += [f"{flag} {str(getattr(report, flag)).lower()}" for flag in flags]
    m, e = report.measured, report.expected
    lines.append(f"measured order={m.order} diameter={m.diameter} connectivity={m.connectivity} size={m.size}")
    lines.append(f"expected order={e.order} diameter={e.diameter} connectivity={e.connectivity} size={e.size}")
    return "\n".join(lines)


def oracle_text(result: OracleResult) -> str:
    lines = [
        f"params {result.params.label()}",
        f"feasible {str(result.feasible).lower()}",
        f"max_size {result.max_size}",
        f"witness_count {result.witness_count}",
        f"graphs_scanned {result.graphs_scanned}",
    ]
    lines += [f"witness {code}" for code in result.witnesses]
    return "\n".join(lines)


def _cell(value) -> str:
    return "-" if value is None else str(value)


def table_text(rows: list[DiscrepancyRow]) -> str:
    header = f"{'n':>3} {'d':>3} {'lvl':>3} {'bound':>6} {'closed':>6} {'oracle':>6}  flags"
    lines = [header]
    for row in rows:
        flags = []
        if not row.feasible:
            flags.append("infeasible")
        if row.closed_form_row is not None and row.feasible and not row.agrees:
            flags.append("closed-form")
        if row.substituted:
            flags.append("substituted")
        if row.oracle_agrees is False:
            flags.append("oracle")
        lines.append(
            f"{row.n:>3} {row.d:>3} {row.level:>3} {_cell(row.bound):>6} "
            f"{_cell(row.closed_form):>6} {_cell(row.oracle):>6}  {','.join(flags)}"
        )
    return "\n".join(lines)
