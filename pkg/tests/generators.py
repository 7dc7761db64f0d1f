"""
Seeded random markets for the property suites.
"""

import random
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from src.concavity import extreme_schedule
from src.market import FirmAssignment, Market, enumerate_acceptable_assignments
from src.schedule import PiScheduleMatching, PiScheme
from src.teams import LeaderFollowerStructure


def _assignments_of(firm: str, contracts: List[Tuple[str, str, str]]) -> List[List[str]]:
    by_worker = {}
    for label, owner, worker in contracts:
        if owner == firm:
            by_worker.setdefault(worker, []).append(label)
    found = []
    for choice in product(*[[None, *labels] for labels in by_worker.values()]):
        labels = [label for label in choice if label is not None]
        if labels:
            found.append(labels)
    return found


def random_market(rng: random.Random, max_contracts: int = 6) -> Market:
    """2-3 firms, 2-3 workers, at most max_contracts contracts, random strict preferences."""
    firms = [f"f{i + 1}" for i in range(rng.randint(2, 3))]
    workers = [f"w{i + 1}" for i in range(rng.randint(2, 3))]
    contracts = [
        (f"c{k + 1}", rng.choice(firms), rng.choice(workers))
        for k in range(rng.randint(1, max_contracts))
    ]
    firm_prefs = {}
    for firm in firms:
        options = _assignments_of(firm, contracts)
        rng.shuffle(options)
        firm_prefs[firm] = options[:rng.randint(0, len(options))]
    worker_prefs = {}
    for worker in workers:
        own = [label for label, _, owner in contracts if owner == worker]
        rng.shuffle(own)
        worker_prefs[worker] = own
    return Market.from_labels(firms, workers, contracts, firm_prefs, worker_prefs)


def random_scheme(rng: random.Random, m: Market, top: int = 4) -> PiScheme:
    """Small positive integer capacities and intensities."""
    capacity = {agent: Fraction(rng.randint(1, top)) for agent in m.agents}
    intensity = {}
    for assignment in enumerate_acceptable_assignments(m):
        members = assignment.agents
        intensity[assignment] = {
            agent: Fraction(rng.randint(1, top)) if agent in members else Fraction(0)
            for agent in m.agents
        }
    return PiScheme.checked(m, capacity, intensity)


def random_team_market(rng: random.Random, max_teams: int = 3) -> Tuple[Market, LeaderFollowerStructure]:
    """2 firms, 2 leaders, up to 3 followers, firms with unit demand over teams."""
    firms = ["f1", "f2"]
    leaders = ["l1", "l2"]
    followers = [f"o{i + 1}" for i in range(rng.randint(0, 3))]
    follows = {o: rng.choice(leaders) for o in followers}
    workers = leaders + followers
    contracts = [(f"{f}{w}", f, w) for f in firms for w in workers]

    teams = []
    for leader in leaders:
        mine = [o for o in followers if follows[o] == leader]
        for picks in product([False, True], repeat=len(mine)):
            teams.append([leader] + [o for o, keep in zip(mine, picks) if keep])
    firm_prefs = {}
    for firm in firms:
        chosen = rng.sample(teams, rng.randint(1, min(max_teams, len(teams))))
        firm_prefs[firm] = [[f"{firm}{w}" for w in team] for team in chosen]
    worker_prefs = {}
    for worker in workers:
        order = firms[:]
        rng.shuffle(order)
        worker_prefs[worker] = [f"{f}{worker}" for f in order]

    m = Market.from_labels(firms, workers, contracts, firm_prefs, worker_prefs)
    return m, LeaderFollowerStructure.from_labels(m, leaders, follows)


def random_weights(rng: random.Random, m: Market) -> dict:
    return {y: Fraction(rng.randint(-3, 6)) for y in enumerate_acceptable_assignments(m)}


def firm_assignment(m: Market, *labels: str) -> FirmAssignment:
    contracts = frozenset(m.contract(label) for label in labels)
    return FirmAssignment(next(iter(contracts)).firm, contracts)


def same_leader_pair(m: Market, lf: LeaderFollowerStructure) -> Optional[Dict[FirmAssignment, Fraction]]:
    """Half shares on two listed teams of one firm under one leader, when a firm lists such a pair."""
    for firm in m.firms:
        by_leader = {}
        for y in m.firm_prefs.get(firm, ()):
            leader = next(w for w in y.workers if w in lf.leaders)
            by_leader.setdefault(leader, []).append(y)
        for teams in by_leader.values():
            if len(teams) > 1:
                return {teams[0]: Fraction(1, 2), teams[1]: Fraction(1, 2)}
    return None


def random_mixture(
    rng: random.Random, m: Market, s: PiScheme, parts: List[Dict[FirmAssignment, Fraction]], count: int = 3
) -> PiScheduleMatching:
    """Random convex combination of count polytope vertices and the given feasible schedules."""
    parts = parts + [dict(extreme_schedule(m, s, random_weights(rng, m)).shares) for _ in range(count)]
    weights = [rng.randint(1, 5) for _ in parts]
    total = sum(weights)
    shares: Dict[FirmAssignment, Fraction] = {}
    for weight, part in zip(weights, parts):
        for y, value in part.items():
            shares[y] = shares.get(y, Fraction(0)) + Fraction(weight, total) * value
    return PiScheduleMatching.for_market(m, shares)
