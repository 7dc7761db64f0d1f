"""
Preference orders of the market.

Firms rank their listed acceptable assignments by list position, with the
empty assignment just below the last listed one and every unlisted non-empty
assignment below the empty one. Workers rank situations by their own contract
first and, for the same contract, by how much the employer likes the
assignment (the externality-augmented order).
"""

from typing import List, Optional, Tuple

from ..errors import AssignmentOwnershipError, SituationMismatchError
from .types import AgentId, Contract, FirmAssignment, Market, Ordering, Situation

EMPTY_TIER = 1
LISTED_TIER = 2
UNLISTED_TIER = 0


def firm_key(m: Market, f: AgentId, assignment: Optional[FirmAssignment]) -> tuple:
    """Sort key realizing firm f's preference; larger is better."""
    if assignment is None or assignment.is_empty:
        return (EMPTY_TIER,)
    if assignment.firm != f:
        raise AssignmentOwnershipError(f"assignment {assignment.label} is not an assignment of {f}")
    positions = m.firm_positions.get(f, {})
    if assignment in positions:
        return (LISTED_TIER, len(positions) - positions[assignment])
    return (UNLISTED_TIER, assignment.labels)


def contract_rank(m: Market, contract: Optional[Contract]) -> int:
    """Rank of a worker's own contract; 0 for no contract."""
    if contract is None:
        return 0
    return m.contract_ranks[contract]


def situation_key(m: Market, w: AgentId, situation: Situation) -> tuple:
    """Sort key realizing the externality-augmented order of worker w; larger is better."""
    if situation.worker != w:
        raise SituationMismatchError(f"situation {situation.label} belongs to {situation.worker}, not {w}")
    if situation.is_empty:
        return (0,)
    own = situation.own_contract
    if own is None:
        raise SituationMismatchError(f"assignment {situation.assignment.label} holds no contract of {w}")
    assignment = situation.assignment
    return (contract_rank(m, own), firm_key(m, assignment.firm, assignment))


def firm_compare(
    m: Market, f: AgentId, y: Optional[FirmAssignment], z: Optional[FirmAssignment]
) -> Ordering:
    """
    Compare two assignments of firm f.

    Args:
        m: The market
        f: The firm whose preference decides
        y: Left assignment (None or an empty assignment means Empty)
        z: Right assignment

    Returns:
        GREATER if f strictly prefers y to z, EQUAL if they coincide, LESS otherwise

    Raises:
        AssignmentOwnershipError: If either assignment belongs to another firm
    """
    return Ordering.of(firm_key(m, f, y), firm_key(m, f, z))


def worker_compare_ext(m: Market, w: AgentId, y: Situation, z: Situation) -> Ordering:
    """
    Compare two situations of worker w under the externality-augmented order.

    The worker's own contract decides first; equal own contracts fall back on
    the employer's ranking of the two assignments.

    Raises:
        SituationMismatchError: If a situation does not involve w
    """
    return Ordering.of(situation_key(m, w, y), situation_key(m, w, z))


def enumerate_acceptable_assignments(m: Market) -> Tuple[FirmAssignment, ...]:
    """All acceptable assignments, firms in declaration order, each list best first."""
    return tuple(assignment for firm in m.firms for assignment in m.firm_prefs.get(firm, ()))


def worker_situations(m: Market, w: AgentId) -> List[Situation]:
    """Empty plus every acceptable-assignment situation of w, ascending."""
    situations = [Situation(w)]
    situations.extend(
        Situation(w, assignment)
        for assignment in enumerate_acceptable_assignments(m)
        if w in assignment.workers
    )
    return sorted(situations, key=lambda s: situation_key(m, w, s))
