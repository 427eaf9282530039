"""Exception hierarchy shared by all weylorder modules."""


class WeylOrderError(Exception):
    """Base class for every error raised by this package."""


class WordSyntaxError(WeylOrderError, ValueError):
    """The text does not conform to the word grammar."""


class WordTooLongError(WeylOrderError):
    """The expanded word would exceed the configured maximum length."""


class NotDyckError(WeylOrderError, ValueError):
    """An operation that needs a Dyck word received something else."""


class BudgetExceededError(WeylOrderError):
    """The rewriting step budget ran out before a normal form was reached."""


class EnumerationBoundError(WeylOrderError):
    """An exhaustive enumeration was asked for on an input past its bound."""


class InexactDivisionError(WeylOrderError, ArithmeticError):
    """A division that must be exact left a remainder."""


class MalformedInputError(WeylOrderError, ValueError):
    """A partition, forest or matrix violates its structural invariants."""
