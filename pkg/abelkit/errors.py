class AbelKitError(Exception):
    pass


class NumericFailure(AbelKitError):
    """Raised when a numeric procedure cannot deliver the requested result."""


## exact series
class BothSymbolic(AbelKitError):
    pass


class NonzeroConstantTerm(AbelKitError):
    pass


class ZeroLeadingCoefficient(AbelKitError):
    pass


class GridMismatch(AbelKitError):
    pass


class BeyondTruncation(AbelKitError):
    pass


## solvers and evaluators
class DegenerateSolve(NumericFailure):
    pass


class OutOfBasin(NumericFailure):
    pass


class OutOfRange(NumericFailure):
    pass


class PrecisionUnreachable(NumericFailure):
    pass


class InsufficientSamples(NumericFailure):
    pass


class ZeroArgument(AbelKitError):
    pass


class UnknownFunction(AbelKitError, KeyError):
    pass
