import os
import sys
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional

import yaml
from colorama import Fore, Style

CONFIG_ENV = "MATCHING_SOLVER_CONFIG"
PROFILE_ENV = "MATCHING_SOLVER_PROFILE"


@dataclass
class EnumerationLimits:
    """Hard bounds for the exhaustive searches; exceeding one raises ResourceBoundError."""
    max_assignments: int = 12
    max_agents: int = 10
    max_firm_contracts: int = 15
    max_matchings: int = 200_000

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EnumerationLimits":
        return cls(
            max_assignments=int(data.get("max_assignments", 12)),
            max_agents=int(data.get("max_agents", 10)),
            max_firm_contracts=int(data.get("max_firm_contracts", 15)),
            max_matchings=int(data.get("max_matchings", 200_000)),
        )


@dataclass
class ScarfOptions:
    initial_row: Optional[str] = None
    l_order: str = "canonical"
    recursion_limit: int = 10_000
    verbose: bool = False

    def __post_init__(self):
        if self.l_order not in ("canonical", "reversed"):
            raise ValueError(f"Unknown l_order: {self.l_order}")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ScarfOptions":
        return cls(
            initial_row=data.get("initial_row"),
            l_order=data.get("l_order", "canonical"),
            recursion_limit=int(data.get("recursion_limit", 10_000)),
            verbose=bool(data.get("verbose", False)),
        )


class SolverConfigManager:
    def __init__(self, config_file: Optional[str] = None):
        self.config_file = config_file or os.getenv(CONFIG_ENV, "solver_config.yaml")
        self.configs = self._load_configs()

    def _load_configs(self) -> Dict[str, Any]:
        """Load solver configurations from YAML file"""
        try:
            if os.path.exists(self.config_file):
                with open(self.config_file, 'r', encoding='utf-8') as f:
                    return yaml.safe_load(f) or {}
            else:
                return self._get_default_configs()
        except Exception as e:
            print(Fore.YELLOW + f"Warning: Failed to load config file {self.config_file}: {e}" + Style.RESET_ALL,
                  file=sys.stderr)
            return self._get_default_configs()

    def _get_default_configs(self) -> Dict[str, Any]:
        """Get default solver configurations"""
        return {
            "enumeration": {"default": asdict(EnumerationLimits())},
            "scarf": {"default": asdict(ScarfOptions())},
        }

    def _section(self, section: str, preference: str) -> Dict[str, Any]:
        section_configs = self.configs.get(section)
        if section_configs is None:
            section_configs = self._get_default_configs().get(section, {})
        config_data = section_configs.get(preference, section_configs.get("default"))
        if config_data is None:
            raise ValueError(f"No configuration found for section: {section}")
        return config_data

    def get_enumeration_limits(self, preference: str = "default") -> EnumerationLimits:
        """Get enumeration bounds for a preference, falling back to the default one"""
        return EnumerationLimits.from_dict(self._section("enumeration", preference))

    def get_scarf_options(self, preference: str = "default") -> ScarfOptions:
        """Get pivoting options for a preference, falling back to the default one"""
        return ScarfOptions.from_dict(self._section("scarf", preference))

    def update_config(self, section: str, preference: str, config_data: Dict[str, Any]):
        """Update configuration for a specific section and preference"""
        if section not in self.configs:
            self.configs[section] = {}
        self.configs[section][preference] = config_data

    def save_configs(self):
        """Save current configurations to YAML file"""
        try:
            with open(self.config_file, 'w', encoding='utf-8') as f:
                yaml.dump(self.configs, f, default_flow_style=False, allow_unicode=True)
        except Exception as e:
            print(Fore.RED + f"Failed to save config file: {e}" + Style.RESET_ALL, file=sys.stderr)

    def get_available_sections(self) -> list[str]:
        return list(self.configs.keys())

    def get_available_preferences(self, section: str) -> list[str]:
        return list(self.configs.get(section, {}).keys())


def default_preference() -> str:
    return os.getenv(PROFILE_ENV, "default")
