"""
Leader-follower structure of a team market and the teams firms may hire.
"""

from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, List, Mapping, Optional, Sequence

from ..errors import MarketValidationError
from ..market import AgentId, FirmAssignment, Market


@dataclass(frozen=True)
class LeaderFollowerStructure:
    """Workers split into leaders and followers; each follower belongs to one leader."""
    leaders: FrozenSet[AgentId]
    followers: FrozenSet[AgentId]
    follows: Mapping[AgentId, AgentId]

    @classmethod
    def from_labels(cls, m: Market, leaders: Sequence[str], follows: Mapping[str, str]) -> "LeaderFollowerStructure":
        """
        Raises:
            MarketValidationError: If a label is not a worker of m
        """
        known = {w.label for w in m.workers}
        unknown = [label for label in [*leaders, *follows, *follows.values()] if label not in known]
        if unknown:
            raise MarketValidationError([f"unknown worker {label} in leader-follower structure" for label in unknown])
        return cls(
            leaders=frozenset(m.agent(label) for label in leaders),
            followers=frozenset(m.agent(label) for label in follows),
            follows={m.agent(o): m.agent(l) for o, l in follows.items()},
        )

    def leader_of(self, worker: AgentId) -> AgentId:
        return worker if worker in self.leaders else self.follows[worker]


@dataclass(frozen=True)
class Team:
    """A worker set with exactly one leader and only that leader's followers."""
    workers: FrozenSet[AgentId]
    leader: AgentId

    @classmethod
    def of(cls, lf: LeaderFollowerStructure, workers) -> Optional["Team"]:
        """The team formed by workers, or None if they do not form one."""
        workers = frozenset(workers)
        leaders = [w for w in workers if w in lf.leaders]
        if len(leaders) != 1:
            return None
        leader = leaders[0]
        if any(lf.follows.get(w) != leader for w in workers if w != leader):
            return None
        return cls(workers, leader)


def structure_violations(m: Market, lf: LeaderFollowerStructure) -> List[str]:
    violations = []
    for worker in m.workers:
        if worker in lf.leaders and worker in lf.followers:
            violations.append(f"worker {worker} is both leader and follower")
        elif worker not in lf.leaders and worker not in lf.followers:
            violations.append(f"worker {worker} is neither leader nor follower")
    for follower in sorted(lf.followers):
        leader = lf.follows.get(follower)
        if leader is None:
            violations.append(f"follower {follower} has no leader")
        elif leader not in lf.leaders:
            violations.append(f"follower {follower} follows {leader}, who is not a leader")
    return violations


def validate_team_market(m: Market, lf: LeaderFollowerStructure) -> List[str]:
    """
    Check that m is basic and every acceptable assignment hires exactly one team.

    Returns:
        Violations; empty iff the structure and the market fit together
    """
    violations = structure_violations(m, lf)
    pairs = Counter((c.firm, c.worker) for c in m.contracts)
    for (firm, worker), count in pairs.items():
        if count > 1:
            violations.append(f"not basic: {count} contracts between {firm} and {worker}")
    if violations:
        return violations
    for firm in m.firms:
        for assignment in m.firm_prefs.get(firm, ()):
            workers = assignment.workers
            leaders = sorted(w.label for w in workers if w in lf.leaders)
            if len(leaders) != 1:
                violations.append(
                    f"{firm}'s {assignment.label} has {len(leaders)} leaders"
                    + (f" ({', '.join(leaders)})" if leaders else "")
                )
            elif Team.of(lf, workers) is None:
                violations.append(f"{firm}'s {assignment.label} holds a follower of another leader")
    return violations


def favorite_team(m: Market, lf: LeaderFollowerStructure, f: AgentId, l: AgentId) -> FirmAssignment:
    """
    U(f, l): firm f's best listed assignment containing leader l, or the empty assignment.

    Expects a validated market, where every worker ranks all of its contracts;
    listed assignments then beat the empty one for everyone involved and the
    first listed match is the maximum.
    """
    for assignment in m.firm_prefs.get(f, ()):
        if l in assignment.workers:
            return assignment
    return FirmAssignment.empty(f)
