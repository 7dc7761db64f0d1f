"""
Market model: agents, contracts, assignments, situations and the two preference orders.
"""

from .types import AgentId, Contract, FirmAssignment, Market, Ordering, Role, Situation
from .preferences import (
    contract_rank,
    enumerate_acceptable_assignments,
    firm_compare,
    firm_key,
    situation_key,
    worker_compare_ext,
    worker_situations,
)
from .validation import validate_market

__all__ = [
    'AgentId',
    'Contract',
    'FirmAssignment',
    'Market',
    'Ordering',
    'Role',
    'Situation',
    'contract_rank',
    'enumerate_acceptable_assignments',
    'firm_compare',
    'firm_key',
    'situation_key',
    'worker_compare_ext',
    'worker_situations',
    'validate_market',
]
