import logging
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field
from sympy import isprime

from dworkhg.config import DEFAULT_GUARD
from dworkhg.exceptions import InvalidPrecisionError, InvalidPrimeError
from dworkhg.frobenius.bounds import e_bound, working_precision
from dworkhg.padic.number import PadicNum

logger = logging.getLogger(__name__)


class PrecisionContext(BaseModel):
    """Prime, target precision and derived truncation data shared by one computation."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(description="The odd prime p.")
    n: int = Field(description="Target exponent: results are exact mod p^n.")
    guard: int = Field(description="Lower bound on nu - n; the policy slack applies when it is larger.")
    nu: int = Field(description="Working exponent used for every intermediate value.")
    e_n: int = Field(description="Pole order bound e_n of the rationalized Frobenius entries.")
    degree_bound: int = Field(description="Truncation degree D* = p*e_n + 2p of the entry series.")

    @property
    def modulus(self) -> int:
        return self.p**self.nu

    def from_int(self, m: int) -> PadicNum:
        return PadicNum.from_int(self.p, m, self.nu)

    def from_fraction(self, q: Fraction | int) -> PadicNum:
        return PadicNum.from_fraction(self.p, q, self.nu)

    def zero(self) -> PadicNum:
        return PadicNum.zero(self.p, self.nu)

    def one(self) -> PadicNum:
        return PadicNum(self.p, 0, 1, self.nu)


def ctx_new(p: int, n: int, guard: int | None = None) -> PrecisionContext:
    """Create the precision context for computing modulo p^n.

    Args:
        p: An odd prime.
        n: The target precision exponent, at least 1.
        guard: Lower bound on nu - n. Defaults to DWORKHG_GUARD.

    Returns:
        The context, with the working exponent nu from working_precision.
    """
    guard = DEFAULT_GUARD if guard is None else guard
    if not isinstance(p, int) or p == 2 or not isprime(p):
        raise InvalidPrimeError(f"p must be an odd prime, got: {p}")
    if not isinstance(n, int) or n < 1:
        raise InvalidPrecisionError(f"n must be a positive integer, got: {n}")
    if guard < 0:
        raise InvalidPrecisionError(f"guard must be nonnegative, got: {guard}")

    e_n, degree_bound = e_bound(p, n)
    nu = working_precision(p, n, guard)
    logger.debug(f"Precision context p={p}, n={n}: e_n={e_n}, D*={degree_bound}, nu={nu}")
    return PrecisionContext(p=p, n=n, guard=guard, nu=nu, e_n=e_n, degree_bound=degree_bound)
