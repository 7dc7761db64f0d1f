from dataclasses import dataclass
from typing import Optional

from ..config.solver_configs import EnumerationLimits, ScarfOptions
from ..errors import InternalInconsistencyError, NoOrdinalStartError
from ..market import Market
from ..scarf.solver import scarf_solve
from ..scarf.trace import ScarfTrace
from ..schedule import (
    FullTimeMatching,
    PiScheduleMatching,
    PiScheme,
    WorstSituationProfile,
    is_stable_matching,
    worst_situation_profile,
)
from .oracle import brute_force_stable_set, find_dominating_matching


@dataclass
class ScarfOutcome:
    """
    What the Scarf pipeline produced.

    schedule and trace are None when no Scarf start exists and the exhaustive
    oracle answered instead.
    """
    schedule: Optional[PiScheduleMatching]
    trace: Optional[ScarfTrace]
    profile: Optional[WorstSituationProfile]
    matching: Optional[FullTimeMatching]

    @property
    def used_fallback(self) -> bool:
        return self.schedule is None


def solve_via_scarf(
    m: Market,
    s: PiScheme,
    options: Optional[ScarfOptions] = None,
    limits: Optional[EnumerationLimits] = None,
) -> ScarfOutcome:
    """
    Run Scarf, then search a matching dominating its output.

    Raises:
        InternalInconsistencyError: If the dominating matching is not stable
    """
    try:
        t, trace = scarf_solve(m, s, options)
    except NoOrdinalStartError:
        stable = brute_force_stable_set(m, limits)
        return ScarfOutcome(None, None, None, stable[0] if stable else None)

    profile = worst_situation_profile(m, s, t)
    matching = find_dominating_matching(m, profile, limits)
    if matching is not None and not is_stable_matching(m, matching, limits):
        raise InternalInconsistencyError(f"dominating matching {matching.label} is not stable")
    return ScarfOutcome(t, trace, profile, matching)


def stable_matching_via_scarf(
    m: Market,
    s: PiScheme,
    options: Optional[ScarfOptions] = None,
    limits: Optional[EnumerationLimits] = None,
) -> Optional[FullTimeMatching]:
    """A stable matching dominating Scarf's output, or None when the market is not pi-concave under s."""
    return solve_via_scarf(m, s, options, limits).matching
