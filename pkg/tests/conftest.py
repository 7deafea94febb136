"""
Pytest fixtures and configuration for test suite
"""
import os
import sys

import pytest
from fastapi.testclient import TestClient

# Add parent directory to path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from api.main import app
from config.settings import Settings
from core.graph import Graph, complete_graph, cycle_graph, path_graph, turan_graph
from core.patterns import pattern


# ==================== Test Settings ====================

@pytest.fixture(scope="session")
def test_settings() -> Settings:
    """Test settings with overrides"""
    os.environ.update({
        "ENVIRONMENT": "testing",
        "LOG_LEVEL": "WARNING",
    })
    return Settings()


# ==================== API Client Fixtures ====================

@pytest.fixture
def client() -> TestClient:
    """FastAPI test client"""
    return TestClient(app)


# ==================== Graph Fixtures ====================

@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def k5() -> Graph:
    return complete_graph(5)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p3_host() -> Graph:
    """The path a-b-c itself"""
    return path_graph(3)


@pytest.fixture
def turan_8_4() -> Graph:
    return turan_graph(8, 4)


# ==================== Pattern Fixtures ====================

@pytest.fixture
def k3_pattern():
    return pattern("K3")


@pytest.fixture
def p3_pattern():
    return pattern("P3")


# ==================== Pytest Configuration ====================

def pytest_configure(config):
    """Configure pytest with custom markers"""
    config.addinivalue_line("markers", "unit: Unit tests")
    config.addinivalue_line("markers", "integration: Integration tests")
    config.addinivalue_line("markers", "e2e: End-to-end tests")
    config.addinivalue_line("markers", "slow: Exhaustive sweeps that take minutes")
    config.addinivalue_line("markers", "api: API endpoint tests")


def pytest_collection_modifyitems(config, items):
    """Modify test collection"""
    for item in items:
        # Add markers based on test location
        if "unit" in str(item.fspath):
            item.add_marker(pytest.mark.unit)
        elif "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
        elif "e2e" in str(item.fspath):
            item.add_marker(pytest.mark.e2e)
