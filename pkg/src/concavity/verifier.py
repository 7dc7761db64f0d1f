from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Optional

from ..config.solver_configs import EnumerationLimits
from ..errors import ResourceBoundError
from ..market import Market, enumerate_acceptable_assignments
from ..schedule import PiScheduleMatching, PiScheme, WorstSituationProfile, profile_from_pattern
from .oracle import has_dominating_matching
from .patterns import Pattern, pattern_agents, pattern_realizable


@dataclass(frozen=True)
class Counterexample:
    pattern: Pattern
    witness: PiScheduleMatching


@dataclass(frozen=True)
class ConcavityVerdict:
    concave: bool
    counterexample: Optional[Counterexample] = None

    def __post_init__(self):
        if self.concave == (self.counterexample is not None):
            raise ValueError("a counterexample is present iff the market is not concave")


def check_pi_concavity(
    m: Market, s: PiScheme, limits: Optional[EnumerationLimits] = None
) -> ConcavityVerdict:
    """
    Decide whether every pi-schedule matching is dominated by a full-time matching.

    Patterns run by support size, then by column positions, then tight sets the
    same way over N(S) in agent order; the first realizable pattern whose
    profile has no dominating matching is reported. A support is skipped when
    the profile with every agent of N(S) tight is already dominated, since that
    matching dominates every smaller tight set too.

    Raises:
        ResourceBoundError: If assignments or agents exceed the configured bounds
    """
    limits = limits or EnumerationLimits()
    columns = enumerate_acceptable_assignments(m)
    if len(columns) > limits.max_assignments:
        raise ResourceBoundError(f"{len(columns)} acceptable assignments, bound is {limits.max_assignments}")
    if len(m.agents) > limits.max_agents:
        raise ResourceBoundError(f"{len(m.agents)} agents, bound is {limits.max_agents}")

    dominated: Dict[tuple, bool] = {}

    def is_dominated(profile: WorstSituationProfile) -> bool:
        key = profile.key()
        if key not in dominated:
            dominated[key] = has_dominating_matching(m, profile, limits)
        return dominated[key]

    for size in range(len(columns) + 1):
        for support in combinations(columns, size):
            members = pattern_agents(m, support)
            if is_dominated(profile_from_pattern(m, support, members)):
                continue
            for tight_size in range(len(members) + 1):
                for tight in combinations(members, tight_size):
                    if is_dominated(profile_from_pattern(m, support, tight)):
                        continue
                    pattern = Pattern(frozenset(support), frozenset(tight))
                    witness = pattern_realizable(m, s, pattern)
                    if witness is not None:
                        return ConcavityVerdict(False, Counterexample(pattern, witness))
    return ConcavityVerdict(True)
