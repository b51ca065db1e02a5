"""Exception hierarchy shared by every module."""


class RibetError(Exception):
    """Base class for all errors raised by this package."""


class DenominatorDivisibleByP(RibetError, ArithmeticError):
    pass


class EmbeddingFailure(DenominatorDivisibleByP):
    """A rational series has a coefficient that is not p-integral."""


class PrecisionExhausted(RibetError, ArithmeticError):
    pass


class PrecisionTooLow(RibetError, ValueError):
    pass


class NonUnitDivisor(RibetError, ZeroDivisionError):
    pass


class NotDivisibleByP(RibetError, ArithmeticError):
    pass


class NotCoprime(RibetError, ValueError):
    pass


class MismatchedField(RibetError, ValueError):
    pass


class IndexOutOfRange(RibetError, ValueError):
    pass


class BadCharacterParity(RibetError, ValueError):
    pass


class TrivialCharacter(RibetError, ValueError):
    pass


class GradingMismatch(RibetError, ValueError):
    pass


class TruncationTooShort(RibetError, ValueError):
    pass


class InternalInconsistency(RibetError, AssertionError):
    """An identity that must hold exactly has failed; indicates a bug."""


class CaseThreeViolation(RibetError):
    """Neither unit-constant construction applies (would contradict Carlitz)."""


class InputNotIrregular(RibetError, ValueError):
    pass


class NoWitnessFound(RibetError):
    pass
