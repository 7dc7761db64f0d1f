"""
Service layer between the command line and the solvers; every service returns pydantic reports.
"""

from .base_service import BaseService
from .concavity_service import ConcavityService
from .scarf_service import ScarfService
from .service_manager import ServiceManager
from .stability_service import StabilityService
from .team_service import TeamService

__all__ = [
    'BaseService',
    'ConcavityService',
    'ScarfService',
    'ServiceManager',
    'StabilityService',
    'TeamService',
]
