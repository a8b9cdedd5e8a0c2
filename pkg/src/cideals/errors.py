"""Exception hierarchy shared across the library.

Everything raised on purpose derives from :class:`Error`, so callers can
catch library failures without also swallowing genuine bugs.
"""


class Error(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(Error):
    """Operands belong to different coefficient fields."""


class DivisionByZero(Error, ZeroDivisionError):
    """Division by, or inversion of, a zero field element."""


class ZeroPolynomial(Error):
    """Root finding was asked about the identically zero polynomial."""


class NotSquare(Error):
    """A square matrix was required."""


class DimensionMismatch(Error):
    """Vector or matrix shapes are incompatible."""


class AmbientMismatch(Error):
    """A vector or subspace lives in the wrong ambient space."""


class NotSubalgebra(Error):
    """The given subspace is not closed under the bracket."""


class NotAnIdeal(Error):
    """The given subspace is not an ideal."""


class ZeroVector(Error):
    """A nonzero vector was required."""


class BudgetExceeded(Error):
    """An enumeration would visit more subspaces than the budget allows."""


class FieldNotFinite(Error):
    """Exhaustive enumeration was requested over the rationals."""


class PreconditionUnmet(Error):
    """An operation-specific hypothesis does not hold for the inputs."""


class UnknownName(Error):
    """No built-in algebra has the requested name."""


class BadParams(Error):
    """Parameters are outside the supported range for a constructor."""


class IndexOutOfRange(Error):
    """A basis index in a bracket table is out of range."""


class DocumentSyntaxError(Error):
    """An algebra document cannot be parsed.

    When the underlying JSON is malformed, ``line`` and ``column`` point
    at the offending spot; for schema problems both are None and the
    message names the bad key.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class JacobiViolation(Error):
    """Structure constants that fail the Jacobi identity.

    ``triples`` holds the offending basis-index triples (i, j, k).
    """

    def __init__(self, message, triples=()):
        super().__init__(message)
        self.triples = tuple(triples)
