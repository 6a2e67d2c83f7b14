"""Error hierarchy shared by the library and the command line."""


class DworkError(Exception):
    """Base class for all dworkhg errors."""

    exit_code: int = 1


class InvalidInputError(DworkError, ValueError):
    """An argument violates a documented precondition."""

    exit_code = 2


class InvalidPrimeError(InvalidInputError):
    """The prime is even, composite or too small."""


class InvalidPrecisionError(InvalidInputError):
    """The requested precision exponent is not positive."""


class InvalidParameterError(InvalidInputError):
    """A hypergeometric parameter, exponent or root of unity is not admissible."""


class InvalidTwistError(InvalidInputError):
    """The Frobenius twist c is not congruent to 1 mod p."""


class InvalidPointError(InvalidInputError):
    """The evaluation point lies outside the domain of the operation."""


class NonUnitError(DworkError, ArithmeticError):
    """An inverse of a non-unit (number or power series) was requested."""

    exit_code = 4


class ConditionViolatedError(DworkError, ValueError):
    """The non-vanishing condition on the truncated series fails at the point."""

    exit_code = 3

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class InternalConsistencyError(DworkError, RuntimeError):
    """A property guaranteed by the theory failed to hold at working precision."""

    exit_code = 4


class BudgetExceededError(DworkError, RuntimeError):
    """A brute-force evaluation would exceed its configured budget."""

    exit_code = 5
