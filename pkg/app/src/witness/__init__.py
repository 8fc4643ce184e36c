from app.src.witness.builder import block_ranges, is_diameter_critical, layered_form, sequential_sum
from app.src.witness.validation import Measurements, ValidationReport, measure, validate_graph, validate_witness

__all__ = [
    "Measurements",
    "ValidationReport",
    "block_ranges",
    "is_diameter_critical",
    "layered_form",
    "measure",
    "sequential_sum",
    "validate_graph",
    "validate_witness",
]
