from typing import Any, Dict

from ..concavity import Pattern, check_pi_concavity
from ..market import Market, enumerate_acceptable_assignments
from ..schedule import PiScheme
from ..structure_outputs import ConcavityReport
from .base_service import BaseService
from .reporting import share_entries


class ConcavityService(BaseService):
    """Service for concavity checks over support patterns"""

    def __init__(self, config_manager=None, preference: str = "default"):
        super().__init__(config_manager, preference)
        self.limits = None
        self.initialize()

    def initialize(self):
        """Read enumeration bounds"""
        self.limits = self.config_manager.get_enumeration_limits(self.preference)

    def check(self, m: Market, s: PiScheme, scheme_name: str = "unit") -> ConcavityReport:
        verdict = check_pi_concavity(m, s, self.limits)
        report = ConcavityReport(scheme=scheme_name, concave=verdict.concave)
        if verdict.counterexample is not None:
            pattern: Pattern = verdict.counterexample.pattern
            report.support = [
                f"{y.firm.label}:{y.label}" for y in enumerate_acceptable_assignments(m) if y in pattern.support
            ]
            report.tight = pattern.tight_labels(m)
            report.witness = share_entries(verdict.counterexample.witness)
        return report

    def get_service_info(self) -> Dict[str, Any]:
        base_info = super().get_service_info()
        base_info.update({
            "max_assignments": self.limits.max_assignments,
            "max_agents": self.limits.max_agents,
        })
        return base_info
