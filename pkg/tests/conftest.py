import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running computations")
    config.addinivalue_line("markers", "extended: opt-in, not desk-scale")
