"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RatNCError(Exception):
    """Base class for all errors raised by :mod:`ratnc`."""


class ResourceLimit(RatNCError):
    """An exhaustive computation would exceed the configured size cap."""


# -- lattice paths -----------------------------------------------------------

class PathError(RatNCError, ValueError):
    pass


class NotCoprime(PathError):
    pass


class BadLength(PathError):
    pass


class BadSum(PathError):
    pass


class BelowDiagonal(PathError):
    """A prefix of the run vector dips to or below the diagonal.

    ``k`` is the first offending east-step index (1-based).
    """

    def __init__(self, k: int, message: str | None = None):
        self.k = k
        super().__init__(message or f"path touches or crosses the diagonal at east step {k}")


class NoNorthStep(PathError):
    pass


# -- partitions / pairs ------------------------------------------------------

class PartitionError(RatNCError, ValueError):
    pass


class NotNoncrossing(PartitionError):
    pass


class HeightMismatch(PartitionError):
    pass


class NotMember(PartitionError):
    pass


class WouldCross(PartitionError):
    pass


class NotCover(PartitionError):
    pass


class UnresolvedBlock(PartitionError):
    pass


# -- sieving -----------------------------------------------------------------

class SievingError(RatNCError, ValueError):
    pass


class NotDInvariant(SievingError):
    pass


class BadDivisor(SievingError):
    pass


class NotVeryGood(SievingError):
    pass


class BadProfile(SievingError):
    pass


class WrongShape(SievingError):
    pass


class NonDivisible(RatNCError, ArithmeticError):
    """Exact polynomial division left a remainder."""


class NotInteger(RatNCError, ArithmeticError):
    """A root-of-unity evaluation did not reduce to a rational integer."""


# -- parking -----------------------------------------------------------------

class NotParkingFunction(RatNCError, ValueError):
    pass
