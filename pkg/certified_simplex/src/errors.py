"""Exceptions raised by the certified_simplex package."""


class PolyhedraError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(PolyhedraError, ValueError):
    """Operands have incompatible shapes."""


class NotInvertible(PolyhedraError):
    """The rows selected by a prebasis do not form an invertible matrix."""


class NotFeasible(PolyhedraError):
    """A point or basis that was required to be feasible is not."""


class NotPointed(PolyhedraError):
    """The constraint matrix has rank smaller than the number of variables."""


class IterationBudgetExceeded(PolyhedraError, RuntimeError):
    """Phase II pivoted more often than there are bases."""


class NotBounded(PolyhedraError):
    """The polyhedron is unbounded along some coordinate direction."""


class CertificateError(PolyhedraError):
    """A certificate produced by the solver failed its own verification."""


class ParseError(PolyhedraError, ValueError):
    """Malformed input text.

    :param message: What went wrong.
    :param line: 1-based line number, if known.
    :param column: 1-based column number, if known.
    """

    def __init__(self, message: str, line: int = None, column: int = None):
        self.message = message
        self.line = line
        self.column = column
        location = ''
        if line is not None:
            location = f'line {line}' + (f', column {column}' if column is not None else '') + ': '
        super().__init__(f'{location}{message}')


class RationalSyntaxError(ParseError):
    """A token is not a rational number in the accepted syntax."""
