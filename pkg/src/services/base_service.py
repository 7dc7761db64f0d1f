from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from ..config.solver_configs import SolverConfigManager


class BaseService(ABC):
    """Base class for all solver services"""

    def __init__(self, config_manager: Optional[SolverConfigManager] = None, preference: str = "default"):
        self.config_manager = config_manager or SolverConfigManager()
        self.preference = preference

    @abstractmethod
    def initialize(self):
        """Read the service settings"""
        pass

    def switch_preference(self, preference: str):
        self.preference = preference
        self.initialize()

    def get_service_info(self) -> Dict[str, Any]:
        """Get service information"""
        return {
            "service_name": self.__class__.__name__,
            "config_file": self.config_manager.config_file,
            "preference": self.preference,
        }
