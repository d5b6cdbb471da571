"""Exhaustive ground truth for small complexes."""

from .census import (
    CensusReport,
    EnumerationSummary,
    cached_census,
    count_acyclic,
    enumerate_acyclic,
    filling_census,
)
from .coset import CosetResult, optimal_fillings
from .simple_cycles import MaxSimpleCycleReport, max_simple_cycle
from .verify import Discrepancy, q_hypertrees, q_zero_deficit_fillings, verify_engine_against_oracle

__all__ = [
    "CensusReport",
    "CosetResult",
    "Discrepancy",
    "EnumerationSummary",
    "MaxSimpleCycleReport",
    "cached_census",
    "count_acyclic",
    "enumerate_acyclic",
    "filling_census",
    "max_simple_cycle",
    "optimal_fillings",
    "q_hypertrees",
    "q_zero_deficit_fillings",
    "verify_engine_against_oracle",
]
