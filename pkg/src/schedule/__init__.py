"""
Pi schemes, schedule matchings, worst-situation profiles, dominance and stability.
"""

from .matching import FullTimeMatching
from .profile import (
    WorstSituationProfile,
    dominates,
    dominates_profile,
    profile_from_pattern,
    worst_situation_profile,
)
from .scheme import (
    PiScheduleMatching,
    PiScheme,
    full_matched_agents,
    is_feasible,
    load,
    unit_scheme,
    validate_scheme,
)
from .stability import (
    Block,
    find_block_matching,
    find_block_pi_schedule,
    is_stable_matching,
    is_stable_pi_schedule,
    iter_blocks_matching,
    iter_blocks_pi_schedule,
)

__all__ = [
    'Block',
    'FullTimeMatching',
    'PiScheduleMatching',
    'PiScheme',
    'WorstSituationProfile',
    'dominates',
    'dominates_profile',
    'find_block_matching',
    'find_block_pi_schedule',
    'full_matched_agents',
    'is_feasible',
    'is_stable_matching',
    'is_stable_pi_schedule',
    'iter_blocks_matching',
    'iter_blocks_pi_schedule',
    'load',
    'profile_from_pattern',
    'unit_scheme',
    'validate_scheme',
    'worst_situation_profile',
]
