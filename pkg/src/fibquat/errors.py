"""Exception types shared across the package."""


class FibquatError(Exception):
    """Base class for all fibquat errors."""


class AlgebraMismatchError(FibquatError):
    """Raised when combining quaternions from algebras with different parameters."""


class NotInvertibleError(FibquatError):
    """Raised when inverting an element of zero norm.

    The offending norm is kept on ``.norm``.
    """

    def __init__(self, norm):
        self.norm = norm
        super().__init__(f"element is not invertible: norm is {norm}")


class DomainError(FibquatError, ValueError):
    """An argument is outside the operation's domain (e.g. binom with k > n)."""


class ConsistencyError(FibquatError):
    """An internal cross-check disagreed.  Never expected to fire."""


class PrecisionGuardError(FibquatError):
    """An index exceeds the range where double precision meets the tolerance."""


class SeriesMismatchError(FibquatError):
    """A truncated series product had a nonzero residual coefficient."""

    def __init__(self, degree, coefficient):
        self.degree = degree
        self.coefficient = coefficient
        super().__init__(f"nonzero residual at degree {degree}: {coefficient}")


class IndicatorDegenerateError(FibquatError):
    """The growth indicator is zero, so no sign threshold exists."""


class ScanExhaustedError(FibquatError):
    """No valid threshold index was found within the scanned range."""


class UnknownIdentityError(FibquatError, KeyError):
    """Requested audit id is not in the registry."""
