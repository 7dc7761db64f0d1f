"""
Rounding a team-market schedule matching to a dominating full-time matching.

Over the firm and leader rows the schedule equations form the incidence
matrix of a bipartite graph: a coalition joins its firm and its leader, a
vacancy share joins its agent to a sink without an equation. Cancelling
fractional cycles in that graph reaches an integral vertex whose coalitions
at share one are the matching.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Union

import networkx as nx

from ..errors import InternalInconsistencyError, InvalidMatchingError, InvalidScheduleError
from ..market import AgentId, FirmAssignment, Market, enumerate_acceptable_assignments
from ..schedule import FullTimeMatching, PiScheduleMatching
from .structure import LeaderFollowerStructure, Team

SINK = "sink"


@dataclass(frozen=True)
class TeamSchedule:
    """Coalition shares plus each agent's vacant share, so every agent's shares sum to one."""
    coalitions: Mapping[FirmAssignment, Fraction]
    vacancy: Mapping[AgentId, Fraction]

    @classmethod
    def from_shares(
        cls, m: Market, shares: Union[PiScheduleMatching, Mapping[FirmAssignment, Fraction]]
    ) -> "TeamSchedule":
        """
        Add the vacancy of every agent to a unit-scheme schedule matching.

        Raises:
            InvalidScheduleError: If some agent would get a negative vacancy
        """
        if isinstance(shares, PiScheduleMatching):
            shares = shares.shares
        coalitions = {y: Fraction(shares.get(y, 0)) for y in enumerate_acceptable_assignments(m)}
        vacancy = {}
        for agent in m.agents:
            used = sum((value for y, value in coalitions.items() if agent in y.agents), Fraction(0))
            vacancy[agent] = 1 - used
        schedule = cls(coalitions, vacancy)
        schedule.check(m)
        return schedule

    def check(self, m: Market) -> None:
        """
        Raises:
            InvalidScheduleError: If a share is negative or some agent's shares do not sum to one
        """
        acceptable = set(enumerate_acceptable_assignments(m))
        for y, value in self.coalitions.items():
            if y not in acceptable:
                raise InvalidScheduleError(f"share for unknown assignment {y.label} of {y.firm}")
            if value < 0:
                raise InvalidScheduleError(f"negative share {value} for {y.label} of {y.firm}")
        for agent in m.agents:
            vacant = self.vacancy.get(agent, Fraction(0))
            if vacant < 0:
                raise InvalidScheduleError(f"negative vacancy {vacant} for {agent}")
            used = sum((value for y, value in self.coalitions.items() if agent in y.agents), Fraction(0))
            if used + vacant != 1:
                raise InvalidScheduleError(f"shares of {agent} sum to {used + vacant}, not 1")

    def to_schedule(self, m: Market) -> PiScheduleMatching:
        return PiScheduleMatching.for_market(m, self.coalitions)


def _support_graph(values: Dict[tuple, Fraction], ends: Dict[tuple, tuple]) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    for item, value in values.items():
        if 0 < value < 1:
            u, v = ends[item]
            graph.add_edge(u, v, key=item)
    return graph


def _cancel_cycle(graph: nx.MultiGraph, values: Dict[tuple, Fraction]) -> None:
    cycle = nx.find_cycle(graph)
    starts = [i for i, (u, _, _) in enumerate(cycle) if u == SINK]
    if starts:
        cycle = cycle[starts[0]:] + cycle[:starts[0]]
    elif len(cycle) % 2:
        raise InternalInconsistencyError("odd cycle in the firm-leader support graph")

    signs = [1 if i % 2 == 0 else -1 for i in range(len(cycle))]
    theta = min(
        (1 - values[item]) if sign > 0 else values[item]
        for (_, _, item), sign in zip(cycle, signs)
    )
    for (u, v, item), sign in zip(cycle, signs):
        values[item] += sign * theta
        if values[item] in (0, 1):
            graph.remove_edge(u, v, key=item)


def round_schedule_to_matching(m: Market, lf: LeaderFollowerStructure, t: TeamSchedule) -> FullTimeMatching:
    """
    Turn a team schedule into an integral one over the same positive-share support.

    Args:
        m: A team market
        lf: Its leader-follower structure
        t: A schedule with vacancies whose agent sums are all one

    Returns:
        The matching of coalitions left at share one; it dominates t

    Raises:
        InvalidScheduleError: If t is not a valid team schedule
    """
    t.check(m)
    values: Dict[tuple, Fraction] = {}
    ends: Dict[tuple, tuple] = {}
    for y, value in t.coalitions.items():
        if value == 0:
            continue
        team = Team.of(lf, y.workers)
        if team is None:
            raise InvalidScheduleError(f"{y.label} of {y.firm} does not hire a team")
        values[("coalition", y)] = value
        ends[("coalition", y)] = (y.firm, team.leader)
    for agent, value in t.vacancy.items():
        if agent.is_firm or agent in lf.leaders:
            values[("vacancy", agent)] = value
            ends[("vacancy", agent)] = (agent, SINK)

    graph = _support_graph(values, ends)
    while graph.number_of_edges():
        try:
            _cancel_cycle(graph, values)
        except nx.NetworkXNoCycle as e:
            raise InternalInconsistencyError("fractional support without a cycle") from e

    chosen = [item[1] for item, value in values.items() if item[0] == "coalition" and value == 1]
    try:
        return FullTimeMatching.from_assignments(chosen)
    except InvalidMatchingError as e:
        raise InternalInconsistencyError(f"rounding hired a worker twice: {e}") from e


def round_shares(m: Market, lf: LeaderFollowerStructure, shares) -> FullTimeMatching:
    """Round a plain schedule matching, adding vacancies first."""
    return round_schedule_to_matching(m, lf, TeamSchedule.from_shares(m, shares))
