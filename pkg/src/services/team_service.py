from typing import Any, Dict

from ..errors import InternalInconsistencyError, MarketValidationError
from ..market import Market
from ..schedule import PiScheduleMatching, dominates, is_stable_matching, unit_scheme
from ..structure_outputs import TeamReport
from ..teams import LeaderFollowerStructure, TeamSchedule, round_schedule_to_matching, validate_team_market, variant_da
from .base_service import BaseService


class TeamService(BaseService):
    """Service for team markets with leaders and followers"""

    def __init__(self, config_manager=None, preference: str = "default"):
        super().__init__(config_manager, preference)
        self.limits = None
        self.initialize()

    def initialize(self):
        """Read enumeration bounds"""
        self.limits = self.config_manager.get_enumeration_limits(self.preference)

    def _validated(self, m: Market, lf: LeaderFollowerStructure):
        violations = validate_team_market(m, lf)
        if violations:
            raise MarketValidationError(violations)

    def deferred_acceptance(self, m: Market, lf: LeaderFollowerStructure) -> TeamReport:
        """Run leader-proposing deferred acceptance and re-verify stability"""
        self._validated(m, lf)
        matching = variant_da(m, lf)
        if not is_stable_matching(m, matching, self.limits):
            raise InternalInconsistencyError(f"deferred acceptance produced unstable {matching.label}")
        return TeamReport(matching=matching.label, stable=True)

    def round_schedule(self, m: Market, lf: LeaderFollowerStructure, t: PiScheduleMatching) -> TeamReport:
        """Round a schedule matching to a full-time matching dominating it"""
        self._validated(m, lf)
        matching = round_schedule_to_matching(m, lf, TeamSchedule.from_shares(m, t))
        if not dominates(m, unit_scheme(m), matching, t):
            raise InternalInconsistencyError(f"rounded matching {matching.label} does not dominate the schedule")
        return TeamReport(
            matching=matching.label,
            stable=is_stable_matching(m, matching, self.limits),
            dominates=True,
        )

    def get_service_info(self) -> Dict[str, Any]:
        base_info = super().get_service_info()
        base_info["max_firm_contracts"] = self.limits.max_firm_contracts
        return base_info
