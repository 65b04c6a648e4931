"""Exception hierarchy shared by all modules.

Every domain error derives from :class:`CycloError`, which is a ``ValueError``
so that callers that only care about bad input can catch the builtin.
"""


class CycloError(ValueError):
    """Base class for domain errors."""


class NotPrime(CycloError):
    pass


class NonMonicModulus(CycloError):
    pass


class GammaNotPrimitive(CycloError):
    """Powers of the candidate generator collide before exponent q - 1.

    Also raised for a reducible modulus, whose unit group is too small.
    """


class FieldTooLarge(CycloError):
    pass


class CountTooLarge(CycloError):
    """Closed-form involution count would need an exponential-size table."""


class DivisionByZero(CycloError, ZeroDivisionError):
    pass


class LogOfZero(CycloError):
    pass


class ZeroHasNoCoset(CycloError):
    pass


class EllDoesNotDivide(CycloError):
    pass


class LengthMismatch(CycloError):
    pass


class NotAPermutation(CycloError):
    pass


class NotBijective(CycloError):
    pass


class EvenCharacteristic(CycloError):
    pass


class SpecParseError(CycloError):
    """Malformed text input (spec grammar, field preset line)."""
