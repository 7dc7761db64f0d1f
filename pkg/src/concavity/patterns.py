from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Mapping, Optional

from ..errors import InternalInconsistencyError
from ..market import AgentId, FirmAssignment, Market, enumerate_acceptable_assignments
from ..schedule import PiScheduleMatching, PiScheme, full_matched_agents
from ..scarf.tableau import maximize


@dataclass(frozen=True)
class Pattern:
    """Which assignments carry positive share and which agents are full matched."""
    support: FrozenSet[FirmAssignment]
    tight: FrozenSet[AgentId]

    @classmethod
    def of(cls, m: Market, s: PiScheme, t: PiScheduleMatching) -> "Pattern":
        return cls(t.support, full_matched_agents(m, s, t))

    def support_labels(self, m: Market) -> list[str]:
        return [y.label for y in enumerate_acceptable_assignments(m) if y in self.support]

    def tight_labels(self, m: Market) -> list[str]:
        return [a.label for a in m.agents if a in self.tight]


def pattern_agents(m: Market, support) -> list[AgentId]:
    """N(S) in agent order."""
    members = set()
    for assignment in support:
        members |= assignment.agents
    return [a for a in m.agents if a in members]


def pattern_realizable(m: Market, s: PiScheme, p: Pattern) -> Optional[PiScheduleMatching]:
    """
    Find a pi-schedule matching with exactly the given support and tight set.

    Maximizes a margin d with t(Y) = d + u(Y) on the support, equality for
    tight agents and slack d + v(i) for the other agents of N(S); agents outside
    N(S) carry no load and cannot be tight.

    Returns:
        A witness when the optimal margin is positive, otherwise None
    """
    support = [y for y in enumerate_acceptable_assignments(m) if y in p.support]
    members = pattern_agents(m, support)
    if not p.tight <= set(members):
        return None
    if not support:
        return PiScheduleMatching.for_market(m, {})

    loose = [a for a in members if a not in p.tight]
    width = 1 + len(support) + len(loose)
    constraints, rhs = [], []
    for agent in members:
        row = [Fraction(0)] * width
        coefficients = [s.coefficient(y, agent) for y in support]
        row[0] = sum(coefficients, Fraction(0))
        row[1:1 + len(support)] = coefficients
        if agent in loose:
            row[0] += 1
            row[1 + len(support) + loose.index(agent)] = Fraction(1)
        constraints.append(row)
        rhs.append(s.capacity[agent])
    objective = [Fraction(1)] + [Fraction(0)] * (width - 1)

    result = maximize(objective, constraints, rhs)
    if not result.is_optimal:
        if result.status == "infeasible":
            return None
        raise InternalInconsistencyError(f"pattern program is {result.status}")
    if result.value <= 0:
        return None
    margin = result.solution[0]
    shares = {y: margin + result.solution[1 + k] for k, y in enumerate(support)}
    return PiScheduleMatching.for_market(m, shares)


def extreme_schedule(m: Market, s: PiScheme, weights: Mapping[FirmAssignment, Fraction]) -> PiScheduleMatching:
    """A vertex of the pi-schedule polytope maximizing the weighted sum of shares."""
    columns = enumerate_acceptable_assignments(m)
    k, n = len(columns), len(m.agents)
    constraints = []
    for i, agent in enumerate(m.agents):
        row = [s.coefficient(y, agent) for y in columns] + [Fraction(int(i == j)) for j in range(n)]
        constraints.append(row)
    objective = [Fraction(weights.get(y, 0)) for y in columns] + [Fraction(0)] * n
    result = maximize(objective, constraints, [s.capacity[a] for a in m.agents])
    if not result.is_optimal:
        raise InternalInconsistencyError(f"schedule polytope program is {result.status}")
    return PiScheduleMatching.from_vector(m, result.solution[:k])
