from typing import Any, Dict

from ..concavity import brute_force_stable_set
from ..market import Market
from ..schedule import FullTimeMatching, find_block_matching
from ..structure_outputs import StabilityReport, StableSetReport
from .base_service import BaseService


class StabilityService(BaseService):
    """Service for stability of full-time matchings"""

    def __init__(self, config_manager=None, preference: str = "default"):
        super().__init__(config_manager, preference)
        self.limits = None
        self.initialize()

    def initialize(self):
        """Read enumeration bounds"""
        self.limits = self.config_manager.get_enumeration_limits(self.preference)

    def check_matching(self, m: Market, matching: FullTimeMatching) -> StabilityReport:
        block = find_block_matching(m, matching, self.limits)
        return StabilityReport(
            matching=matching.label,
            stable=block is None,
            block=block.label if block is not None else None,
        )

    def stable_set(self, m: Market) -> StableSetReport:
        stable = brute_force_stable_set(m, self.limits)
        enumerated = 1
        for worker in m.workers:
            enumerated *= len(m.contracts_of_worker(worker)) + 1
        return StableSetReport(matchings=[matching.label for matching in stable], enumerated=enumerated)

    def get_service_info(self) -> Dict[str, Any]:
        base_info = super().get_service_info()
        base_info["max_matchings"] = self.limits.max_matchings
        return base_info
