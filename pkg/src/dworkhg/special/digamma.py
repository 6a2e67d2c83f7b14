import logging

from dworkhg.exceptions import InternalConsistencyError, InvalidParameterError, InvalidTwistError
from dworkhg.padic.number import PadicNum
from dworkhg.special.dwork import RationalParam
from dworkhg.special.unramified import ln1p, padic_log, teichmuller, zq_init

logger = logging.getLogger(__name__)


def psi_tilde(i: int, N: int, p: int, nu: int) -> PadicNum:
    """The p-adic digamma value psi~(i/N) mod p^nu.

    Evaluated as the sum over the nontrivial N-th roots of unity e of
    (1 - e^(-i)) * ln1p(e), which must land in Z_p.

    Args:
        i: Numerator, 0 <= i < N.
        N: Denominator, prime to p.
        p: The prime.
        nu: Precision exponent of the result.

    Returns:
        The value as a p-adic number known mod p^nu.
    """
    if N % p == 0:
        raise InvalidParameterError(f"p={p} divides the denominator N={N}")
    if not 0 <= i < N:
        raise InvalidParameterError(f"Digamma numerator must satisfy 0 <= i < N, got i={i}, N={N}")
    if i == 0:
        return PadicNum.zero(p, nu)

    # ln1p loses one digit, so work one digit deeper
    ctx = zq_init(N, p, nu + 1)
    zeta = teichmuller(ctx.generator())
    total = ctx.constant(0)
    for j in range(1, N):
        coefficient = ctx.constant(1) - zeta ** (-i * j % N)
        total = total + coefficient * ln1p(zeta**j)

    coordinates = total.coordinates()
    if any(c % p**nu for c in coordinates[1:]):
        raise InternalConsistencyError(f"psi~({i}/{N}) mod {p}^{nu} does not lie in Z_p: {coordinates}")
    logger.debug(f"psi~({i}/{N}) mod {p}^{nu} = {coordinates[0] % p**nu}")
    return PadicNum.from_int(p, coordinates[0], nu)


def tau_constant(a: RationalParam, b: RationalParam, c: PadicNum, nu: int) -> PadicNum:
    """Constant term -psi~(a) - psi~(b) + log(c)/p of the twisted tau series.

    Raises:
        InvalidTwistError: c is not congruent to 1 mod p.
    """
    p = c.p
    if not c.is_unit or (c - 1).residue(1) != 0:
        raise InvalidTwistError(f"Twist {c!r} is not congruent to 1 mod {p}")
    value = -psi_tilde(a.num % a.den, a.den, p, nu) - psi_tilde(b.num % b.den, b.den, p, nu)
    if not (c - 1).is_zero:
        value = value + padic_log(c, nu) / p
    return value
