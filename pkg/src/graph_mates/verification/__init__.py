"""Independent oracles cross-checking the exact algorithms."""

from .oracle_suite import (
    CheckResult, run_oracle_suite, determinantal_factors,
    check_char_poly_agreement, check_snf_divisibility, check_det_consistency,
    check_permutation_invariance, check_graph6_round_trip, check_snf_minors,
)

__all__ = [
    'CheckResult', 'run_oracle_suite', 'determinantal_factors',
    'check_char_poly_agreement', 'check_snf_divisibility', 'check_det_consistency',
    'check_permutation_invariance', 'check_graph6_round_trip', 'check_snf_minors',
]
