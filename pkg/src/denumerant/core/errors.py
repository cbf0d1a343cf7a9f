""" Exceptions raised by the counting library.

Each class corresponds to one CLI exit status, see ``cli.EXIT_CODES``.

"""


__all__ = (
    "DenumerantError",
    "InvalidInputError",
    "TableFormatError",
    "TableValidationError",
    "ResourceError",
    "InvariantError",
    "CursorExhaustedError",
)


class DenumerantError(Exception):
    """ Base class for all library errors.

    """


class InvalidInputError(DenumerantError, ValueError):
    """ An argument or input file violates a documented precondition.

    """


class TableFormatError(InvalidInputError):
    """ A table file cannot be parsed.

    """
    def __init__(self, message, line=None, field=None):
        """ Initialize this error.

        :param message: description of the problem
        :param line: 1-based line number in the source document, if known
        :param field: dotted path of the offending field, if known
        """
        context = []
        if line is not None:
            context.append(f"line {line}")
        if field is not None:
            context.append(f"field {field}")
        if context:
            message = f"{message} ({', '.join(context)})"
        super().__init__(message)
        self.line = line
        self.field = field


class TableValidationError(InvalidInputError):
    """ A parsed table violates a residue table invariant.

    """


class ResourceError(DenumerantError):
    """ A configured budget or cap would be exceeded.

    """


class InvariantError(DenumerantError, RuntimeError):
    """ An internal consistency check failed.

    """


class CursorExhaustedError(InvariantError):
    """ A cursor was advanced past its final tuple.

    """
