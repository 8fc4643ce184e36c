from app.src.extremal.closed_forms import kappa_closed_form, lambda_closed_form, ore_kappa, ore_plain
from app.src.extremal.construction import (
    ExtremalConstruction,
    constraint_set,
    construction,
    kappa_construction,
    kappa_sequence,
    lambda_construction,
    lambda_sequence,
    minimum_feasible_order,
)
from app.src.extremal.printed import PrintedForm, printed_kappa_sequence, printed_lambda_sequence
from app.src.extremal.reports import (
    Baselines,
    BoundReport,
    DiscrepancyRow,
    DiscrepancyTable,
    baseline_bounds,
    bound_grid,
    bound_report,
    bound_report_kappa,
    bound_report_lambda,
    discrepancy_csv,
    discrepancy_row,
)

__all__ = [
    "Baselines",
    "BoundReport",
    "DiscrepancyRow",
    "DiscrepancyTable",
    "ExtremalConstruction",
    "PrintedForm",
    "baseline_bounds",
    "bound_grid",
    "bound_report",
    "bound_report_kappa",
    "bound_report_lambda",
    "constraint_set",
    "construction",
    "discrepancy_csv",
    "discrepancy_row",
    "kappa_closed_form",
    "kappa_construction",
    "kappa_sequence",
    "lambda_closed_form",
    "lambda_construction",
    "lambda_sequence",
    "minimum_feasible_order",
    "ore_kappa",
    "ore_plain",
    "printed_kappa_sequence",
    "printed_lambda_sequence",
]
