"""
Blocking and stability for full-time matchings and for pi-schedule matchings.
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, List, Optional

from ..config.solver_configs import EnumerationLimits
from ..errors import ResourceBoundError
from ..market import (
    AgentId,
    FirmAssignment,
    Market,
    Ordering,
    Situation,
    contract_rank,
    enumerate_acceptable_assignments,
    firm_compare,
    firm_key,
    worker_compare_ext,
)
from .matching import FullTimeMatching
from .profile import worst_situation_profile
from .scheme import PiScheduleMatching, PiScheme


@dataclass(frozen=True)
class Block:
    firm: AgentId
    assignment: FirmAssignment

    @property
    def label(self) -> str:
        return f"{self.firm} with {self.assignment.label}"


def _unlisted_assignments(m: Market, firm: AgentId) -> List[FirmAssignment]:
    """Every non-empty assignment of firm missing from its list, best first."""
    by_worker = {}
    for contract in m.contracts_of_firm(firm):
        by_worker.setdefault(contract.worker, []).append(contract)
    listed = set(m.firm_prefs.get(firm, ()))
    assignments = []
    for choice in product(*[[None, *options] for options in by_worker.values()]):
        assignment = FirmAssignment(firm, frozenset(c for c in choice if c is not None))
        if not assignment.is_empty and assignment not in listed:
            assignments.append(assignment)
    return sorted(assignments, key=lambda y: firm_key(m, firm, y), reverse=True)


def _workers_agree(m: Market, assignment: FirmAssignment, matching: FullTimeMatching) -> bool:
    return all(
        contract_rank(m, contract) >= contract_rank(m, matching.contract_of(contract.worker))
        for contract in assignment.contracts
    )


def iter_blocks_matching(
    m: Market, matching: FullTimeMatching, limits: Optional[EnumerationLimits] = None
) -> Iterator[Block]:
    """
    Yield every assignment blocking the matching, firms in order, each firm best first.

    Raises:
        ResourceBoundError: If some firm holds more contracts than the exhaustive search allows
    """
    limits = limits or EnumerationLimits()
    for firm in m.firms:
        size = len(m.contracts_of_firm(firm))
        if size > limits.max_firm_contracts:
            raise ResourceBoundError(
                f"firm {firm} has {size} contracts, exhaustive block search allows {limits.max_firm_contracts}"
            )
    for firm in m.firms:
        current = matching.assignment(firm)
        candidates = list(m.firm_prefs.get(firm, ())) + [FirmAssignment.empty(firm)]
        if firm_key(m, firm, current) < firm_key(m, firm, FirmAssignment.empty(firm)):
            candidates.extend(_unlisted_assignments(m, firm))
        for candidate in candidates:
            if firm_compare(m, firm, candidate, current) is not Ordering.GREATER:
                break
            if _workers_agree(m, candidate, matching):
                yield Block(firm, candidate)


def find_block_matching(
    m: Market, matching: FullTimeMatching, limits: Optional[EnumerationLimits] = None
) -> Optional[Block]:
    """First blocking assignment in search order, or None when the matching is stable."""
    return next(iter_blocks_matching(m, matching, limits), None)


def is_stable_matching(m: Market, matching: FullTimeMatching, limits: Optional[EnumerationLimits] = None) -> bool:
    return find_block_matching(m, matching, limits) is None


def iter_blocks_pi_schedule(m: Market, s: PiScheme, t: PiScheduleMatching) -> Iterator[Block]:
    """Yield every acceptable assignment blocking t, in column order."""
    profile = worst_situation_profile(m, s, t)
    for assignment in enumerate_acceptable_assignments(m):
        firm = assignment.firm
        if firm_compare(m, firm, assignment, profile.firms[firm]) is not Ordering.GREATER:
            continue
        if all(
            worker_compare_ext(m, w, Situation(w, assignment), profile.workers[w]) is Ordering.GREATER
            for w in assignment.workers
        ):
            yield Block(firm, assignment)


def find_block_pi_schedule(m: Market, s: PiScheme, t: PiScheduleMatching) -> Optional[Block]:
    return next(iter_blocks_pi_schedule(m, s, t), None)


def is_stable_pi_schedule(m: Market, s: PiScheme, t: PiScheduleMatching) -> bool:
    return find_block_pi_schedule(m, s, t) is None
