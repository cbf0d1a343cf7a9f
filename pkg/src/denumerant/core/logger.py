""" Package-wide logging.

Every module logs through the same ``logger`` object. Nothing is emitted until
the logger is started, so library callers see no output unless they ask for
it; the CLI starts it on STDERR to keep STDOUT reserved for counts.

"""
from logging import getLogger, getLoggerClass, setLoggerClass
from logging import Formatter, NullHandler, StreamHandler


__all__ = "logger",


class _Logger(getLoggerClass()):
    """ Message logger.

    """
    LOGFMT = "%(asctime)s;%(levelname)s;%(name)s;%(message)s"

    def __init__(self, name=None):
        """ Initialize this logger.

        The NullHandler installed here is never removed, so logging calls are
        safe before start() and after stop().

        :param name: logger name (package name by default)
        """
        super().__init__(name or __name__.split(".")[0])
        self.addHandler(NullHandler())
        return

    def start(self, level="WARNING", stream=None):
        """ Start logging to a stream.

        Calling start() twice for the same stream duplicates every record on
        it. Levels used by the package:

            DEBUG - route selection, term counts, pruning statistics
            INFO - configuration and table file I/O
            WARNING - a route was skipped or a limit nearly reached
            ERROR - a command failed

        :param level: priority level name or number
        :param stream: output stream (stderr by default)
        """
        if isinstance(level, str):
            level = level.upper()
        self.setLevel(level)
        handler = StreamHandler(stream)
        handler.setFormatter(Formatter(self.LOGFMT))
        handler.setLevel(self.level)
        self.addHandler(handler)
        return

    def stop(self):
        """ Stop logging with this logger.

        """
        for handler in self.handlers[1:]:
            self.removeHandler(handler)
        return

    @property
    def started(self) -> bool:
        """ True if at least one output handler is attached.

        """
        return len(self.handlers) > 1


setLoggerClass(_Logger)
logger = getLogger(__name__.split(".", 1)[0])
