import os

import pytest

from src.tools.market_file import load_market_file

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
MARKETS_DIR = os.path.join(ROOT, "data", "markets")
REPO_CONFIG = os.path.join(ROOT, "solver_config.yaml")


def market_path(name: str) -> str:
    return os.path.join(MARKETS_DIR, f"{name}.market")


@pytest.fixture
def market_file():
    return market_path


@pytest.fixture
def eb():
    """EB market with its numeric scheme."""
    return load_market_file(market_path("eb"))


@pytest.fixture
def eb_unit():
    return load_market_file(market_path("eb_unit"))


@pytest.fixture
def m2():
    return load_market_file(market_path("m2"))


@pytest.fixture
def m4():
    return load_market_file(market_path("m4"))


@pytest.fixture
def m4_pi():
    return load_market_file(market_path("m4_pi"))


@pytest.fixture
def teams():
    return load_market_file(market_path("teams"))


@pytest.fixture
def empty_market():
    return load_market_file(market_path("empty"))
