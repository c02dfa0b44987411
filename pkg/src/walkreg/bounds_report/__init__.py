"""Bound checks, full-graph analysis reports and distance diagrams."""
from .analysis import analyze, report_dict, report_json
from .bounds import (
    fundamental_bound,
    godsil_bound,
    local_multiplicity_check,
    local_spectra,
    multiplicity_theorems,
    terwilliger_local_bounds,
)
from .diagram import distance_profile, emit_diagram

__all__ = [
    "analyze",
    "distance_profile",
    "emit_diagram",
    "fundamental_bound",
    "godsil_bound",
    "local_multiplicity_check",
    "local_spectra",
    "multiplicity_theorems",
    "report_dict",
    "report_json",
    "terwilliger_local_bounds",
]
