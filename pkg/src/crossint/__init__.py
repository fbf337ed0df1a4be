"""Maximum total size of pairwise cross-intersecting uniform families.

Lex-order arithmetic on k-subsets, the partner machinery for L-initial
families, closed-form bounds, and a brute-force oracle to check them.
"""
from __future__ import annotations

from .bounds import (
    RegimeError,
    equal_size_bound,
    f_value,
    lambda_values,
    mixed_bound,
    nonmixed_bound,
    two_family_bound,
    weighted_bound,
)
from .oracle import BudgetExceeded, classify_extremal, exact_M, f_profile
from .partners import corresponding_k_set, is_maximal_pair, k_parity, k_partner, partner
from .subsets import Params, Regime, count_L, lex_precedes, rank, successor, unrank

__all__ = [
    "BudgetExceeded", "Params", "Regime", "RegimeError", "classify_extremal",
    "corresponding_k_set", "count_L", "equal_size_bound", "exact_M", "f_profile",
    "f_value", "is_maximal_pair", "k_parity", "k_partner", "lambda_values",
    "lex_precedes", "mixed_bound", "nonmixed_bound", "partner", "rank",
    "successor", "two_family_bound", "unrank", "weighted_bound",
]
