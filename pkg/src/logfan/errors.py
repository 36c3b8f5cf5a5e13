class LogfanError(ValueError):
    """Base class for every error raised by this package."""


class NotPointed(LogfanError):
    """A cone that was required to be pointed contains a line."""


class RankMismatch(LogfanError):
    """Objects living in lattices of different rank were combined."""


class OutOfRange(LogfanError):
    """An integer parameter is outside the supported range."""


class PivotNotOne(LogfanError):
    """The chosen pivot entry of a matrix is not equal to 1."""


class RankDeficient(LogfanError):
    """The rows given as a subspace basis are linearly dependent."""


class TooLarge(LogfanError):
    """An exhaustive enumeration would exceed the desk-scale cap."""
