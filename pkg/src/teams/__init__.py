"""
Team markets: leader-follower structures, leader-proposing deferred acceptance and schedule rounding.
"""

from .deferred_acceptance import proposal_order, variant_da
from .rounding import TeamSchedule, round_schedule_to_matching, round_shares
from .structure import LeaderFollowerStructure, Team, favorite_team, structure_violations, validate_team_market

__all__ = [
    'LeaderFollowerStructure',
    'Team',
    'TeamSchedule',
    'favorite_team',
    'proposal_order',
    'round_schedule_to_matching',
    'round_shares',
    'structure_violations',
    'validate_team_market',
    'variant_da',
]
