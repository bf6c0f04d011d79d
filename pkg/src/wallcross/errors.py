"""Exception types.

Every error raised for bad input derives from :class:`InvalidInput`, which the
CLI maps to exit status 2.
"""


class InvalidInput(ValueError):
    pass


class NotMinusOneClass(InvalidInput):
    """A reflection was requested in a class whose square is not -1."""


class W2NotPreserved(InvalidInput):
    """The isometry does not fix the integral lift of w2 modulo 2."""


class NotOdd(InvalidInput):
    pass


class OutsideDisk(InvalidInput):
    pass


class OnWall(InvalidInput):
    pass


class NonGenericPoint(InvalidInput):
    """A chamber point lies exactly on a wall.

    The offending wall is kept on the ``wall`` attribute.
    """

    def __init__(self, message, wall=None):
        super().__init__(message)
        self.wall = wall


class NotForwardSheet(InvalidInput):
    pass


class DegenerateSegment(InvalidInput):
    pass


class MissingSymbol(InvalidInput, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "missing symbol"


class OddBPlus(InvalidInput):
    pass


class RohlinViolation(InvalidInput):
    pass
