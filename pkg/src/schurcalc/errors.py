"""Exception types raised by schurcalc."""


class SchurCalcError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SchurCalcError, ValueError):
    pass


class BoundExceeded(SchurCalcError, ValueError):
    pass


class EmptyPartition(SchurCalcError, ValueError):
    pass


class SizeMismatch(SchurCalcError, ValueError):
    pass


class ZeroObject(SchurCalcError, ValueError):
    pass


class InvalidSplit(SchurCalcError, ValueError):
    pass


class ImproperIdeal(SchurCalcError, ValueError):
    pass


class EmptyIdeal(SchurCalcError, ValueError):
    pass
