from .solver_configs import EnumerationLimits, ScarfOptions, SolverConfigManager, default_preference

__all__ = ['EnumerationLimits', 'ScarfOptions', 'SolverConfigManager', 'default_preference']
