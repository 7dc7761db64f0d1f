from dataclasses import dataclass
from typing import Collection, FrozenSet, Mapping, Optional

from ..market import (
    AgentId,
    FirmAssignment,
    Market,
    Ordering,
    Situation,
    firm_compare,
    firm_key,
    situation_key,
    worker_compare_ext,
)
from .matching import FullTimeMatching
from .scheme import PiScheduleMatching, PiScheme, full_matched_agents


@dataclass(frozen=True)
class WorstSituationProfile:
    """
    Each agent's worst situation in a schedule matching.

    Firms map to an assignment (empty when not full matched), workers to a
    situation. Agents outside full_matched always hold the empty entry.
    """
    firms: Mapping[AgentId, FirmAssignment]
    workers: Mapping[AgentId, Situation]
    full_matched: FrozenSet[AgentId]

    def key(self) -> tuple:
        """Hashable identity of the profile."""
        return (
            tuple(sorted((f, a.labels) for f, a in self.firms.items())),
            tuple(sorted((w, s.label) for w, s in self.workers.items())),
            tuple(sorted(self.full_matched)),
        )

    def entry_label(self, agent: AgentId) -> str:
        if agent.is_firm:
            return self.firms[agent].label
        return self.workers[agent].label


def profile_from_pattern(
    m: Market, support: Collection[FirmAssignment], tight: Collection[AgentId]
) -> WorstSituationProfile:
    """
    Worst situations determined by which assignments carry positive share and which agents are tight.

    Args:
        m: The market
        support: Assignments with positive share
        tight: Full-matched agents; each must belong to some assignment of the support

    Returns:
        The worst-situation profile
    """
    tight = frozenset(tight)
    firms = {}
    for firm in m.firms:
        worst: Optional[FirmAssignment] = None
        if firm in tight:
            owned = [y for y in support if y.firm == firm]
            worst = min(owned, key=lambda y: firm_key(m, firm, y)) if owned else None
        firms[firm] = worst if worst is not None else FirmAssignment.empty(firm)
    workers = {}
    for worker in m.workers:
        situation = Situation(worker)
        if worker in tight:
            candidates = [Situation(worker, y) for y in support if worker in y.workers]
            if candidates:
                situation = min(candidates, key=lambda s: situation_key(m, worker, s))
        workers[worker] = situation
    return WorstSituationProfile(firms=firms, workers=workers, full_matched=tight)


def worst_situation_profile(m: Market, s: PiScheme, t: PiScheduleMatching) -> WorstSituationProfile:
    """Profile of a feasible pi-schedule matching."""
    return profile_from_pattern(m, t.support, full_matched_agents(m, s, t))


def dominates_profile(m: Market, matching: FullTimeMatching, profile: WorstSituationProfile) -> bool:
    """True iff every agent weakly prefers its place in the matching to its worst situation."""
    for firm in m.firms:
        if firm_compare(m, firm, matching.assignment(firm), profile.firms[firm]) is Ordering.LESS:
            return False
    for worker in m.workers:
        if worker_compare_ext(m, worker, matching.situation(worker), profile.workers[worker]) is Ordering.LESS:
            return False
    return True


def dominates(m: Market, s: PiScheme, matching: FullTimeMatching, t: PiScheduleMatching) -> bool:
    return dominates_profile(m, matching, worst_situation_profile(m, s, t))
