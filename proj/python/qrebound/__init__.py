"""Bounds on the quantum relative entropy in terms of norm distances."""

from ._core import (
    bound_report,
    counterexample_bad_bound,
    fannes_value,
    fidelity,
    figure,
    log_bound_value,
    property_names,
    relative_entropy,
    rescaled_distance,
    run_suite,
    s_of_x,
    trace_distance,
    upper_bound_sharp_d2,
    upper_bound_sharp_dgt2,
    von_neumann_entropy,
    witness_lower,
    witness_upper,
)

__all__ = [
    "bound_report",
    "counterexample_bad_bound",
    "fannes_value",
    "fidelity",
    "figure",
    "log_bound_value",
    "property_names",
    "relative_entropy",
    "rescaled_distance",
    "run_suite",
    "s_of_x",
    "trace_distance",
    "upper_bound_sharp_d2",
    "upper_bound_sharp_dgt2",
    "von_neumann_entropy",
    "witness_lower",
    "witness_upper",
]
