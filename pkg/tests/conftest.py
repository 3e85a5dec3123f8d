"""
Shared pytest configuration
"""
import sys
from pathlib import Path

import pytest
from hypothesis import settings as hypothesis_settings

# Add the repository root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from qtcatalan.config.budgets import BudgetConfig  # noqa: E402
from qtcatalan.utils.result_cache import ResultCache  # noqa: E402

# Wall-clock deadlines make property tests flaky on slow or loaded machines
hypothesis_settings.register_profile("qtcat", deadline=None)
hypothesis_settings.load_profile("qtcat")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale rank or enumeration runs (minutes)")


@pytest.fixture
def budgets():
    return BudgetConfig()


@pytest.fixture
def cache(tmp_path):
    return ResultCache(tmp_path / "cache")
