""" Test suite for the core.logger module.

The script can be executed on its own or incorporated into a larger test suite.

"""
from io import StringIO

import pytest

from denumerant.core.logger import logger


class LoggerTest:
    """ Test suite for the package logger.

    """
    def test_silent_by_default(self):
        assert not logger.started
        logger.critical("no handler should print this")

    def test_start(self):
        stream = StringIO()
        logger.start("debug", stream)
        logger.debug("table built")
        assert logger.started
        assert "DEBUG;denumerant;table built" in stream.getvalue()

    def test_level(self):
        stream = StringIO()
        logger.start("warning", stream)
        logger.info("suppressed")
        logger.warning("route skipped")
        output = stream.getvalue()
        assert "suppressed" not in output
        assert "route skipped" in output

    def test_stop(self):
        stream = StringIO()
        logger.start("debug", stream)
        logger.stop()
        logger.critical("after stop")
        assert not stream.getvalue()
        assert not logger.started


# Make the module executable.

if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
