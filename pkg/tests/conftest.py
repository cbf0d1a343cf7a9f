""" Shared pytest configuration.

"""
import pytest
from hypothesis import HealthCheck, settings

from denumerant.core.config import config
from denumerant.core.logger import logger


settings.register_profile(
    "denumerant",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("denumerant")


@pytest.fixture(autouse=True)
def isolated():
    """ Reset global configuration and logging around every test.

    """
    config.clear()
    yield
    config.clear()
    logger.stop()
