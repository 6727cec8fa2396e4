"""Exact graded-algebra arithmetic and the partition-side identities."""
from .graded import GradedPoly, gp_exp, gp_mul
from .identities import (
    ExactReport,
    correlation_check,
    exact_fredholm,
    exact_kernel_entry,
    exact_phi_coeff,
    exact_toeplitz_det,
    exact_verify,
    gessel_check,
    inclusion_exclusion_check,
    locality_check,
    schur_pair_sum,
    szego_check,
    szego_poly,
)
from .partitions import Partition, partitions_of, partitions_up_to, schur_poly

__all__ = [
    "GradedPoly", "gp_exp", "gp_mul", "ExactReport", "correlation_check",
    "exact_fredholm", "exact_kernel_entry", "exact_phi_coeff", "exact_toeplitz_det",
    "exact_verify", "gessel_check", "inclusion_exclusion_check", "locality_check",
    "schur_pair_sum", "szego_check", "szego_poly", "Partition", "partitions_of", "partitions_up_to",
    "schur_poly",
]
