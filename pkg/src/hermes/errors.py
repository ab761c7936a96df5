"""Exception hierarchy shared by all hermes modules."""


class HermesError(Exception):
    """Base class for every error raised by this package."""


# field construction and arithmetic

class NotPrime(HermesError, ValueError):
    pass


class NotPrimePower(HermesError, ValueError):
    pass


class TooLarge(HermesError, ValueError):
    pass


class InvalidModulus(HermesError, ValueError):
    pass


class FieldMismatch(HermesError, ValueError):
    pass


class DivisionByZero(HermesError, ZeroDivisionError):
    pass


class NotQuadraticExtension(HermesError, ValueError):
    pass


# matrices

class NotHermitian(HermesError, ValueError):
    def __init__(self, i, j, message=None):
        self.i = i
        self.j = j
        super().__init__(message or f"entry ({i},{j}) is not the conjugate of entry ({j},{i})")


class ShapeMismatch(HermesError, ValueError):
    pass


class EnumerationTooLarge(HermesError, ValueError):
    pass


# counting

class NonIntegralResult(HermesError, ArithmeticError):
    pass


class RadiusOutOfRange(HermesError, ValueError):
    pass


class UnsupportedRadius(HermesError, ValueError):
    pass


# codes

class UnsupportedDistance(HermesError, ValueError):
    pass


class InvalidParameters(HermesError, ValueError):
    pass


class Degenerate(HermesError, ValueError):
    """The code has a single codeword, so its minimum distance is undefined."""


class CodewordSpaceTooLarge(HermesError, ValueError):
    pass


class LinearDependence(HermesError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"basis matrix {index} is F_q-linearly dependent on the preceding ones")


class CodeFileError(HermesError, ValueError):
    """Malformed code file; ``where`` locates the offending line or JSON field."""

    def __init__(self, message, where=None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)
