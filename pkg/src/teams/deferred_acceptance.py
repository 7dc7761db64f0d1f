from typing import Dict, List, Optional

from ..errors import InternalInconsistencyError
from ..market import AgentId, Market, firm_key
from ..schedule import FullTimeMatching
from .structure import LeaderFollowerStructure, favorite_team


def proposal_order(m: Market, leader: AgentId) -> List[AgentId]:
    """Firms in the leader's preference order, from the leader's ranked contracts."""
    firms: List[AgentId] = []
    for contract in m.worker_prefs.get(leader, ()):
        if contract.firm not in firms:
            firms.append(contract.firm)
    return firms


def variant_da(m: Market, lf: LeaderFollowerStructure) -> FullTimeMatching:
    """
    Leader-proposing deferred acceptance over teams.

    Each round every free leader proposes to its next firm. A firm compares the
    new applicants it would hire with the leader it holds by their favorite
    teams at the firm and keeps the best one; the others become free. When no
    leader proposes, each firm hires the favorite team of the leader it holds.

    Args:
        m: A team market
        lf: Its leader-follower structure

    Returns:
        The resulting matching
    """
    orders = {l: proposal_order(m, l) for l in sorted(lf.leaders)}
    next_choice = {l: 0 for l in orders}
    held: Dict[AgentId, Optional[AgentId]] = {f: None for f in m.firms}

    while True:
        holding = {l for l in held.values() if l is not None}
        proposals: Dict[AgentId, List[AgentId]] = {}
        for leader, order in orders.items():
            if leader in holding or next_choice[leader] >= len(order):
                continue
            proposals.setdefault(order[next_choice[leader]], []).append(leader)
            next_choice[leader] += 1
        if not proposals:
            break
        for firm, applicants in proposals.items():
            qualified = [l for l in applicants if not favorite_team(m, lf, firm, l).is_empty]
            if held[firm] is not None:
                qualified.append(held[firm])
            if not qualified:
                continue
            keys = [firm_key(m, firm, favorite_team(m, lf, firm, l)) for l in qualified]
            if len(set(keys)) != len(keys):
                raise InternalInconsistencyError(f"two leaders share a favorite team at {firm}")
            held[firm] = max(qualified, key=lambda l: firm_key(m, firm, favorite_team(m, lf, firm, l)))

    return FullTimeMatching.from_assignments(
        favorite_team(m, lf, firm, leader) for firm, leader in held.items() if leader is not None
    )
