"""Exception hierarchy.

Errors fall into three families that the CLI maps onto exit codes:
parameter/usage problems, internal consistency failures and resource guards.
"""


class CartierError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(CartierError, ValueError):
    """Invalid input parameters (exit code 1)."""


class InternalConsistencyError(CartierError, RuntimeError):
    """A hard self-check failed; indicates a bug or a wrong derivation (exit code 2)."""


class ResourceGuardError(CartierError):
    """A desk-scale resource limit was hit (exit code 3)."""


class InvalidPrime(ParameterError):
    pass


class EvenCharacteristicUnsupported(ParameterError):
    pass


class ZeroGenus(ParameterError):
    pass


class HypothesisFailure(ParameterError):
    """Raised in strict mode when one of the curve hypotheses does not hold."""


class ModulusMismatch(ParameterError):
    pass


class DivisionByZero(CartierError, ZeroDivisionError):
    pass


class UndefinedPower(CartierError, ValueError):
    """0 ** 0 in a field."""


class NonDivisibleExponent(InternalConsistencyError):
    pass


class BasisCountMismatch(InternalConsistencyError):
    pass


class ImageOutsideBasis(InternalConsistencyError):
    def __init__(self, monomial, params=None):
        self.monomial = monomial
        self.params = params
        where = f" for {params.triple}" if params is not None else ""
        super().__init__(f"Cartier image monomial x^{monomial[0]}*y^{monomial[1]} is not a basis element{where}")


class SupersingularityViolation(InternalConsistencyError):
    """A maximal curve came out with positive p-rank."""


class FieldTooLarge(ResourceGuardError):
    pass


class GenusCapExceeded(ResourceGuardError):
    pass
