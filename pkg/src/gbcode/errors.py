"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Operands live in rings (or spaces) of different dimension."""


class ZeroPolynomialError(ValueError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class DomainError(ValueError):
    """Input outside the domain an operation is defined on."""


class ResourceLimitError(RuntimeError):
    """A configured safety cap (iterations, enumeration size) was exceeded."""


class NotGroebnerError(ValueError):
    """A basis that was required to be Groebner fails the S-pair criterion."""


class RankDeficiencyError(ValueError):
    """Generator matrix rows are linearly dependent."""


class NotStandardizableError(ValueError):
    """The leading k columns cannot be turned into the identity by row operations."""


class DecodeFailure(Exception):
    """No correction within the error-correcting radius exists."""
