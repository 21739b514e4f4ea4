"""Exception hierarchy shared by all liesc modules."""


class LiescError(Exception):
    """Base class for all errors raised by liesc."""


class DomainMismatch(LiescError):
    pass


class DivisionByZero(LiescError):
    pass


class InvalidScalar(LiescError):
    pass


class AmbientMismatch(LiescError):
    pass


class NotContained(LiescError):
    pass


class NotASubalgebra(LiescError):
    pass


class NotNilpotent(LiescError):
    pass


class JacobiViolation(LiescError):
    """Raised at construction time; carries the offending basis triple (1-based)."""

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"Jacobi identity fails on basis triple {self.triple}")


class InfiniteDomain(LiescError):
    pass


class ZeroAlgebra(LiescError):
    pass


class TooLarge(LiescError):
    pass


class NotFrattinian(LiescError):
    pass


class AbelianInput(LiescError):
    pass


class InternalAssertionFailed(LiescError):
    """A proof-step identity failed on a concrete instance; carries witness data."""

    def __init__(self, message, witnesses=None):
        self.witnesses = witnesses or {}
        super().__init__(message)


class MalformedCertificate(LiescError):
    pass


class IdentificationNotCentral(LiescError):
    pass


class NotInvertible(LiescError):
    pass


class ParseError(LiescError):
    pass


class IndexOutOfRange(LiescError):
    pass
