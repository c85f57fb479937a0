"""Experiments: one entry point per counting statement, each exact and self-checking."""

from .diffcover import DiffCoverReport, difference_cover_min
from .distribution import (
    FermatRecord,
    IntervalRecord,
    IntervalSpec,
    fermat_subgroup,
    interval_bound,
    interval_distribution,
    interval_image_count,
)
from .equations import FiberedFamily, explicit_bound, fibered_solution_count, named_equation_count
from .incidence import DESK_CONSTANT, IncidenceInstance, count_incidences, incidence_experiment
from .sampling import random_fibers, random_subset, rng_for
from .sumproduct import SumProductRecord, polynomial_sum_check, shifted_product_check, sum_product_check

__all__ = [
    "DESK_CONSTANT", "DiffCoverReport", "FermatRecord", "FiberedFamily", "IncidenceInstance",
    "IntervalRecord", "IntervalSpec", "SumProductRecord", "count_incidences",
    "difference_cover_min", "explicit_bound", "fermat_subgroup", "fibered_solution_count",
    "incidence_experiment", "interval_bound", "interval_distribution", "interval_image_count",
    "named_equation_count", "polynomial_sum_check", "random_fibers", "random_subset", "rng_for",
    "shifted_product_check", "sum_product_check",
]
