"""Exception types shared across the package.

Every user-facing failure derives from InvalidInput so the CLI can map it to
exit code 2.  InternalError marks a broken invariant that cannot be reached
by bad input alone: it means a bug, and it is never caught by the CLI.
"""


class LogFanoError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(LogFanoError):
    """Rejected user input: bad matrix, bad word, bad bound."""


class NonSquare(InvalidInput):
    """Matrix input is empty, ragged, non-square, or non-integer."""


class DiagonalNotTwo(InvalidInput):
    """A diagonal entry of a generalized Cartan matrix differs from 2."""


class PositiveOffDiagonal(InvalidInput):
    """An off-diagonal entry is positive."""


class AsymmetricZeroPattern(InvalidInput):
    """A[i][j] = 0 without A[j][i] = 0."""


class UnknownType(InvalidInput):
    """Type label does not name a built-in Cartan type."""


class InvalidRank(InvalidInput):
    """Recognized type family with an out-of-range rank."""


class IndexOutOfRange(InvalidInput):
    """Node or position index outside 1..n (or 1..length)."""


class NotReduced(InvalidInput):
    """A reduced word was required and the given word is not reduced."""


class MTooSmall(InvalidInput):
    """Boundary scale M does not exceed every Schubert coefficient a_j."""


class LengthMismatch(InvalidInput):
    """Vector or divisor has the wrong length (or lives on the wrong space)."""


class NotPositiveRoot(InvalidInput):
    """Coroot input does not have the sign pattern of a positive real root."""


class NotFiniteType(InvalidInput):
    """Unbounded enumeration requested for a non-finite Cartan class."""


class CapExceeded(InvalidInput):
    """An enumeration grew past its element or word cap."""


class InternalError(LogFanoError):
    """An invariant guaranteed for all valid inputs failed: a bug."""
