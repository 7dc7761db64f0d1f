"""
Concavity checks over support patterns, dominating matchings and brute-force stability oracles.
"""

from .oracle import (
    brute_force_stable_set,
    enumerate_matchings,
    enumeration_key,
    find_dominating_matching,
    has_dominating_matching,
    iter_dominating_matchings,
)
from .patterns import Pattern, extreme_schedule, pattern_agents, pattern_realizable
from .pipeline import ScarfOutcome, solve_via_scarf, stable_matching_via_scarf
from .verifier import ConcavityVerdict, Counterexample, check_pi_concavity

__all__ = [
    'ConcavityVerdict',
    'Counterexample',
    'Pattern',
    'ScarfOutcome',
    'brute_force_stable_set',
    'check_pi_concavity',
    'enumerate_matchings',
    'enumeration_key',
    'extreme_schedule',
    'find_dominating_matching',
    'has_dominating_matching',
    'iter_dominating_matchings',
    'pattern_agents',
    'pattern_realizable',
    'solve_via_scarf',
    'stable_matching_via_scarf',
]
