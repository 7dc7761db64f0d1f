from dataclasses import replace
from typing import Any, Dict

from ..concavity import solve_via_scarf
from ..errors import InternalInconsistencyError
from ..market import Market
from ..scarf.solver import scarf_solve
from ..schedule import (
    PiScheduleMatching,
    PiScheme,
    find_block_pi_schedule,
    is_feasible,
    is_stable_matching,
    worst_situation_profile,
)
from ..structure_outputs import ScheduleReport, SolveReport, TraceReport, fraction_text
from .base_service import BaseService
from .reporting import full_matched_labels, profile_entries, share_entries


class ScarfService(BaseService):
    """Service for Scarf pivoting and the schedule matchings it produces"""

    def __init__(self, config_manager=None, preference: str = "default", **overrides):
        super().__init__(config_manager, preference)
        self.overrides = overrides
        self.options = None
        self.limits = None
        self.initialize()

    def initialize(self):
        """Read pivoting options and enumeration bounds, then apply overrides"""
        options = self.config_manager.get_scarf_options(self.preference)
        changes = {key: value for key, value in self.overrides.items() if value is not None}
        self.options = replace(options, **changes)
        self.limits = self.config_manager.get_enumeration_limits(self.preference)

    def solve(self, m: Market, s: PiScheme) -> SolveReport:
        """Stable pi-schedule matching, its profile and a dominating matching when one exists"""
        outcome = solve_via_scarf(m, s, self.options, self.limits)
        report = SolveReport(fallback=outcome.used_fallback)
        if outcome.schedule is not None:
            report.schedule = share_entries(outcome.schedule)
            report.full_matched = full_matched_labels(m, s, outcome.schedule)
            report.profile = profile_entries(m, outcome.profile)
            report.pivots = len(outcome.trace.steps)
        if outcome.matching is not None:
            report.matching = outcome.matching.label
            report.stable = is_stable_matching(m, outcome.matching, self.limits)
            if not report.stable:
                raise InternalInconsistencyError(f"matching {outcome.matching.label} failed re-verification")
        return report

    def trace(self, m: Market, s: PiScheme) -> TraceReport:
        """Full pivot trace of one run"""
        t, trace = scarf_solve(m, s, self.options)
        return TraceReport(
            lines=trace.lines(),
            columns=[c.label for c in trace.columns],
            solution=[fraction_text(x) for x in trace.solution],
            schedule=share_entries(t),
        )

    def check_schedule(self, m: Market, s: PiScheme, t: PiScheduleMatching) -> ScheduleReport:
        """Feasibility, worst situations and the first block of a given schedule matching"""
        if not is_feasible(t, s):
            return ScheduleReport(schedule=share_entries(t), feasible=False)
        block = find_block_pi_schedule(m, s, t)
        return ScheduleReport(
            schedule=share_entries(t),
            feasible=True,
            stable=block is None,
            full_matched=full_matched_labels(m, s, t),
            profile=profile_entries(m, worst_situation_profile(m, s, t)),
            block=block.label if block is not None else None,
        )

    def get_service_info(self) -> Dict[str, Any]:
        base_info = super().get_service_info()
        base_info.update({
            "l_order": self.options.l_order,
            "initial_row": self.options.initial_row,
            "recursion_limit": self.options.recursion_limit,
        })
        return base_info
