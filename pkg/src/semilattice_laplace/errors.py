"""Exception hierarchy shared across the package."""


class LaplaceError(Exception):
    """Base class for every error raised by this package."""


class InvalidGround(LaplaceError, ValueError):
    pass


class InvalidFamily(LaplaceError, ValueError):
    """A family that is not union-closed, lacks the empty set, or mixes grounds."""


class NotInFamily(LaplaceError, KeyError):
    pass


class NotASemicharacter(LaplaceError, ValueError):
    pass


class TooLarge(LaplaceError, ValueError):
    """A dense operation was requested above its size ceiling."""


class BadArguments(LaplaceError, ValueError):
    pass


class ScalarModeError(LaplaceError, TypeError):
    """Rational and float scalars were mixed, or a value is not a valid scalar."""


class DegenerateBase(LaplaceError, ValueError):
    """A base set was given an empty required-hit set."""


class IncompleteTable(LaplaceError, KeyError):
    pass


class ProblemFormatError(LaplaceError, ValueError):
    """Malformed problem or table file; the message names the offending item."""
