"""Exception types.

Most of these signal an internal arithmetic inconsistency: the formulas they
guard always produce integers for valid input, so raising one means a formula
was transcribed or applied wrongly.
"""


class InvariantError(ArithmeticError):
    """Base class for every exception raised by this package."""


class IntegerRangeError(InvariantError):
    """An input or intermediate value left the supported signed 128-bit range."""


class HalfIntegerGenus(InvariantError):
    pass


class HalfIntegerChi(InvariantError):
    pass


class NonIntegerG(InvariantError):
    pass


class UnknownFixture(InvariantError, KeyError):
    pass


class InvalidTuple(InvariantError, ValueError):
    pass


class DegenerateLinkage(InvariantError, ValueError):
    pass


class RangeError(InvariantError, ValueError):
    pass
