"""
Shared fixtures for the Bell/Hopf test suite.
"""

import pytest

from bell_hopf.boson import clear_normal_order_cache
from bell_hopf.config import ENV_FOCK_DIM
from bell_hopf.config import ENV_LOG_LEVEL
from bell_hopf.config import ENV_ORDER
from bell_hopf.config import ENV_PRECISION
from bell_hopf.config import BellHopfConfig


@pytest.fixture
def default_config():
    return BellHopfConfig()


@pytest.fixture
def isolated_env(monkeypatch, tmp_path):
    """No BELL_HOPF_* variables and no config file on the search path."""
    for name in (ENV_ORDER, ENV_FOCK_DIM, ENV_PRECISION, ENV_LOG_LEVEL):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture(autouse=True)
def fresh_normal_order_cache():
    clear_normal_order_cache()
    yield
    clear_normal_order_cache()
