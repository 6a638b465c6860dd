class UmbralError(ValueError):
    """Base class for precondition failures raised by this package."""


class ZeroConstantTerm(UmbralError):
    pass


class BadConstantTerm(UmbralError):
    pass


class NonDivisible(UmbralError):
    pass


class TruncationTooShort(UmbralError):
    pass


class OrderViolation(UmbralError):
    pass


class IndexOutOfRange(UmbralError):
    pass


class LambdaForbidden(UmbralError):
    pass


class NonRationalScale(UmbralError):
    pass


class EvenModulus(UmbralError):
    pass
