"""Exception classes shared across the package."""


class SymSchemeError(Exception):
    """Base class for all package errors."""


# field construction
class NotPrime(SymSchemeError, ValueError):
    pass


class EvenCharacteristic(SymSchemeError, ValueError):
    pass


class ReducibleModulus(SymSchemeError, ValueError):
    pass


class NoTowerConfigured(SymSchemeError):
    pass


class NoPrimitiveElement(SymSchemeError):
    pass


# forms and sets
class DimensionMismatch(SymSchemeError, ValueError):
    pass


class NotABasis(SymSchemeError, ValueError):
    pass


class NotAHyperplaneBasis(NotABasis):
    pass


class NotAdditive(SymSchemeError, ValueError):
    pass


class BudgetExceeded(SymSchemeError):
    """An enumeration would exceed the configured budget."""


class InvalidParams(SymSchemeError, ValueError):
    pass


class InconsistentParameters(SymSchemeError, ValueError):
    pass


class PreconditionViolated(SymSchemeError, ValueError):
    pass


class InternalInconsistency(SymSchemeError):
    """Raised when exact invariants fail; indicates a bug, not bad input."""


class NonRealDual(InternalInconsistency):
    pass


class NegativeDual(InternalInconsistency):
    pass


class Infeasible(SymSchemeError):
    pass


class LimitExceeded(SymSchemeError):
    pass
