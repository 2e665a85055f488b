"""Exception types shared across the package."""


class RevDicksonError(Exception):
    pass


class NonPrime(RevDicksonError, ValueError):
    pass


class BoundExceeded(RevDicksonError, ValueError):
    pass


class ContextMismatch(RevDicksonError, ValueError):
    pass


class FieldDivisionByZero(RevDicksonError, ZeroDivisionError):
    pass


class NegativeInput(RevDicksonError, ValueError):
    pass


class EvenCharacteristic(RevDicksonError, ValueError):
    pass


class RangeError(RevDicksonError, ValueError):
    pass


class WrongParity(RevDicksonError, ValueError):
    pass


class InexactDivision(RevDicksonError, ArithmeticError):
    pass


class OutOfWindow(RevDicksonError, ValueError):
    pass


class ResultNotInBaseField(RevDicksonError, ArithmeticError):
    """Raised when x^n + (1-x)^n falls outside the base field (internal bug)."""
