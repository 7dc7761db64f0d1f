import pytest

from src.config import SolverConfigManager
from src.errors import MarketValidationError
from src.schedule import PiScheduleMatching
from src.services import ServiceManager
from src.teams import LeaderFollowerStructure
from tests.conftest import REPO_CONFIG


@pytest.fixture
def manager():
    return ServiceManager(SolverConfigManager(REPO_CONFIG))


def test_health_check(manager):
    assert manager.health_check() == {"scarf": True, "stability": True, "concavity": True, "teams": True}
    info = manager.get_all_services_info()
    assert info["scarf"]["l_order"] == "canonical"
    assert info["stability"]["max_matchings"] == 200_000


def test_switching_preference(manager):
    manager.configure("large")
    assert manager.get_stability_service().limits.max_matchings == 2_000_000
    manager.configure("reversed_l")
    assert manager.get_scarf_service().options.l_order == "reversed"


def test_scarf_overrides(manager):
    manager.configure_scarf(initial_row="w2", l_order="reversed")
    options = manager.get_scarf_service().options
    assert options.initial_row == "w2"
    assert options.l_order == "reversed"
    assert not options.verbose


def test_solve_report(manager, eb):
    m, s, _ = eb
    report = manager.get_scarf_service().solve(m, s)
    assert report.matching == "{z1,z2}"
    assert report.stable
    assert not report.fallback
    assert sorted(report.full_matched) == ["w1", "w2"]


def test_schedule_report(manager, m2):
    m, s, _ = m2
    t = PiScheduleMatching.from_vector(m, [0, 0, 0, 1])
    report = manager.get_scarf_service().check_schedule(m, s, t)
    assert report.feasible
    assert report.stable is False
    assert report.block is not None


def test_team_service_validates(manager, m2):
    m, _, _ = m2
    lf = LeaderFollowerStructure.from_labels(m, ["w1", "w2"], {})
    with pytest.raises(MarketValidationError):
        manager.get_team_service().deferred_acceptance(m, lf)
