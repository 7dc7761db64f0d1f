from typing import Any, Dict, Optional

from ..config.solver_configs import SolverConfigManager
from .base_service import BaseService
from .concavity_service import ConcavityService
from .scarf_service import ScarfService
from .stability_service import StabilityService
from .team_service import TeamService


class ServiceManager:
    """Central manager for all solver services"""

    def __init__(self, config_manager: Optional[SolverConfigManager] = None, preference: str = "default"):
        self.config_manager = config_manager or SolverConfigManager()
        self.preference = preference
        self.services: Dict[str, BaseService] = {}
        self._initialize_services()

    def _initialize_services(self):
        """Initialize all services with the current preference"""
        self.services = {
            'scarf': ScarfService(self.config_manager, self.preference),
            'stability': StabilityService(self.config_manager, self.preference),
            'concavity': ConcavityService(self.config_manager, self.preference),
            'teams': TeamService(self.config_manager, self.preference),
        }

    def get_scarf_service(self) -> ScarfService:
        """Get Scarf pivoting service"""
        return self.services['scarf']

    def get_stability_service(self) -> StabilityService:
        """Get matching stability service"""
        return self.services['stability']

    def get_concavity_service(self) -> ConcavityService:
        """Get concavity service"""
        return self.services['concavity']

    def get_team_service(self) -> TeamService:
        """Get team market service"""
        return self.services['teams']

    def configure(self, preference: str = "default"):
        """Switch every service to another preference"""
        self.preference = preference
        for service in self.services.values():
            service.switch_preference(preference)

    def configure_scarf(self, initial_row: Optional[str] = None, l_order: Optional[str] = None,
                        verbose: Optional[bool] = None):
        """Configure Scarf service with per-run overrides"""
        self.services['scarf'] = ScarfService(
            self.config_manager,
            self.preference,
            initial_row=initial_row,
            l_order=l_order,
            verbose=verbose,
        )

    def get_all_services_info(self) -> Dict[str, Any]:
        """Get information about all services"""
        return {
            service_name: service.get_service_info()
            for service_name, service in self.services.items()
        }

    def health_check(self) -> Dict[str, bool]:
        """Check if all services are properly initialized"""
        health_status = {}
        for service_name, service in self.services.items():
            try:
                service.get_service_info()
                health_status[service_name] = True
            except Exception:
                health_status[service_name] = False
        return health_status
