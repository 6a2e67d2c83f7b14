"""Truncated power series for the entries of the hypergeometric Frobenius matrix.

For a parameter pair (a, b) with Dwork primes (a', b') and the lift
sigma(t) = c t^p, write F = F_ab, G = F_a'b'(c t^p), s = c t^p and tau for the
twisted tau series. The entries are

    A = G/F - t (1-t)^(a+b) F' G tau
    C = (1-t)^(a+b-1) F G tau
    B = p s (1-s) (F'_a'b'/F_a'b')(s) A - t (1-t)^(a+b) (1-s)^(1-a'-b') F'/G
    D = p s (1-s) (F'_a'b'/F_a'b')(s) C + (1-t)^(a+b-1) (1-s)^(1-a'-b') F/G
    E = (1-t)^(a+b) (1-s)^(-(a'+b'))

and the Frobenius matrix is [[pA, B], [pC, D]].
"""
import logging
from fractions import Fraction
from typing import Iterator

from dworkhg.exceptions import InternalConsistencyError, InvalidPointError
from dworkhg.frobenius.bounds import EntryKind, numerator_degree_bound
from dworkhg.frobenius.schemas import FrobeniusEntrySet, TwistConfig
from dworkhg.padic.context import PrecisionContext
from dworkhg.padic.number import PadicNum, divide_exact
from dworkhg.series.truncated import (
    SeriesTrunc,
    s_binpow,
    s_divide_exact,
    s_eval,
    s_integrate,
    s_inv,
    s_mul,
    s_scale,
    s_shift,
    s_subst_frob,
    s_truncate,
)
from dworkhg.special.digamma import tau_constant
from dworkhg.special.dwork import RationalParam, dwork_prime, validate_param

logger = logging.getLogger(__name__)


def pochhammer_coefficients(a: RationalParam, b: RationalParam, ctx: PrecisionContext) -> Iterator[PadicNum]:
    """Yield c_k = (a)_k (b)_k / k!^2 for k = 0, 1, 2, ...

    Every factor (a+k) = (a_num + k a_den)/a_den enters as an exact integer, so
    the valuation of each coefficient is exact.
    """
    c = ctx.one()
    k = 0
    while True:
        yield c
        c = divide_exact(c * ((a.num + k * a.den) * (b.num + k * b.den)), a.den * b.den * (k + 1) ** 2)
        k += 1


def hg_series(
    a: RationalParam, b: RationalParam, d: int, ctx: PrecisionContext
) -> tuple[SeriesTrunc, SeriesTrunc]:
    """The hypergeometric series F_ab(t) and its derivative, both modulo t^(d+1)."""
    validate_param(a, ctx.p, top_level=False)
    validate_param(b, ctx.p, top_level=False)
    coefficients = []
    for k, c in enumerate(pochhammer_coefficients(a, b, ctx)):
        coefficients.append(c)
        if k == d + 1:
            break
    F = SeriesTrunc(ctx.p, tuple(coefficients[: d + 1]))
    F_prime = SeriesTrunc(ctx.p, tuple(c * k for k, c in enumerate(coefficients) if k > 0))
    return F, F_prime


def tau_series(a: RationalParam, b: RationalParam, d: int, ctx: PrecisionContext) -> SeriesTrunc:
    """The solution of t tau' = 1 - 1/((1-t)^(a+b) F_ab^2) with tau(0) = 0, modulo t^(d+1)."""
    F, _ = hg_series(a, b, d, ctx)
    u = s_inv(s_mul(s_binpow(a.value + b.value, d, ctx), s_mul(F, F, d), d), d)
    # (1 - u)/t: u has constant term 1
    integrand = SeriesTrunc(ctx.p, tuple(-c for c in u.coeffs[1:]))
    return s_integrate(integrand)


def assert_integral(series: SeriesTrunc, label: str, ctx: PrecisionContext) -> None:
    """Check that every coefficient is p-integral and known at least mod p^n.

    Raises:
        InternalConsistencyError: A coefficient has negative valuation or too little precision.
    """
    for k, c in enumerate(series.coeffs):
        if not c.is_zero and c.v < 0:
            raise InternalConsistencyError(f"Coefficient {k} of {label} has valuation {c.v} < 0")
        if c.prec < ctx.n:
            raise InternalConsistencyError(
                f"Coefficient {k} of {label} is only known mod {ctx.p}^{c.prec}, below the target {ctx.p}^{ctx.n}"
            )


def subst_binpow(r: Fraction, c: PadicNum, d: int, ctx: PrecisionContext) -> SeriesTrunc:
    """(1 - c t^p)^r modulo t^(d+1)."""
    return s_subst_frob(s_binpow(r, d // ctx.p, ctx), c, d)


def tau_sigma_series(
    a: RationalParam, b: RationalParam, twist: TwistConfig, d: int, ctx: PrecisionContext
) -> SeriesTrunc:
    """The twisted series kappa + tau_ab(t) - p^(-1) tau_a'b'(c t^p), which has integral coefficients."""
    a1, b1 = dwork_prime(a, ctx.p), dwork_prime(b, ctx.p)
    kappa = tau_constant(a, b, twist.c, ctx.nu)
    tau = tau_series(a, b, d, ctx)
    tau_frob = s_divide_exact(s_subst_frob(tau_series(a1, b1, d // ctx.p, ctx), twist.c, d), ctx.p)
    coeffs = list((tau - tau_frob).coeffs)
    coeffs[0] = coeffs[0] + kappa
    result = SeriesTrunc(ctx.p, tuple(coeffs))
    assert_integral(result, f"tau^sigma({a}, {b})", ctx)
    return result


def exponent_defect(a: RationalParam, b: RationalParam, p: int) -> int:
    """The integer m = a + b - p(a' + b'), which is never positive."""
    a1, b1 = dwork_prime(a, p), dwork_prime(b, p)
    m = a.value + b.value - p * (a1.value + b1.value)
    if m.denominator != 1 or m > 0:
        raise InternalConsistencyError(f"Exponent a+b-p(a'+b') = {m} for ({a}, {b}) is not an integer <= 0")
    return int(m)


def abcd_series(
    a: RationalParam, b: RationalParam, twist: TwistConfig, d: int, ctx: PrecisionContext, k: int = 0
) -> FrobeniusEntrySet:
    """Build A, B, C, D and E modulo t^(d+1) for the pair (a, b) at orbit index k.

    Args:
        a: First parameter of the pair.
        b: Second parameter of the pair.
        twist: The Frobenius lift constant.
        d: Truncation degree, normally D* = p*e_n + 2p.
        ctx: The precision context.
        k: Orbit index recorded in the result.

    Returns:
        The entry series, with integrality of A, B, C, D checked.
    """
    p, c = ctx.p, twist.c
    a1, b1 = dwork_prime(a, p), dwork_prime(b, p)
    exponent_defect(a, b, p)
    ab, ab1 = a.value + b.value, a1.value + b1.value
    logger.debug(f"Building entry series for orbit index {k}: ({a}, {b}) -> ({a1}, {b1}), degree {d}")

    F, F_prime = hg_series(a, b, d, ctx)
    F1, F1_prime = hg_series(a1, b1, d // p, ctx)
    F1_inv = s_inv(F1, d // p)
    G = s_subst_frob(F1, c, d)
    G_inv = s_subst_frob(F1_inv, c, d)
    log_derivative = s_subst_frob(s_mul(F1_prime, F1_inv, d // p), c, d)
    tau = tau_sigma_series(a, b, twist, d, ctx)

    s = s_subst_frob(SeriesTrunc.monomial(ctx.one(), 1, d), c, d)
    one_minus_s = s_subst_frob(SeriesTrunc.constant(ctx.one(), d) - SeriesTrunc.monomial(ctx.one(), 1, d), c, d)
    e_ab = s_binpow(ab, d, ctx)
    e_ab_minus_one = s_binpow(ab - 1, d, ctx)
    w = subst_binpow(1 - ab1, c, d, ctx)

    t_e_F_prime = s_truncate(s_shift(s_mul(e_ab, F_prime, d), 1), d)
    t_e_F_prime_G_tau = s_mul(t_e_F_prime, s_mul(G, tau, d), d)
    A = s_mul(G, s_inv(F, d), d) - t_e_F_prime_G_tau
    C = s_mul(e_ab_minus_one, s_mul(F, s_mul(G, tau, d), d), d)

    p_s_log_derivative = s_scale(s_mul(s_mul(s, one_minus_s, d), log_derivative, d), p)
    B = s_mul(p_s_log_derivative, A, d) - s_mul(s_mul(t_e_F_prime, w, d), G_inv, d)
    D = s_mul(p_s_log_derivative, C, d) + s_mul(s_mul(e_ab_minus_one, w, d), s_mul(F, G_inv, d), d)
    E = s_mul(e_ab, subst_binpow(-ab1, c, d, ctx), d)

    for label, series in (("A", A), ("B", B), ("C", C), ("D", D)):
        assert_integral(series, f"{label}({a}, {b})", ctx)
    return FrobeniusEntrySet(
        k=k, a=a, b=b, twist=twist, degree_bound=d, A=A, B=B, C=C, D=D, E=E, tau_sigma=tau
    )


def frobenius_determinant_series(entries: FrobeniusEntrySet) -> SeriesTrunc:
    """det [[pA, B], [pC, D]] as a power series, equal to p (1-t)^(a+b-1) (1-c t^p)^(1-a'-b')."""
    d = entries.degree_bound
    AD = s_mul(entries.A, entries.D, d)
    BC = s_mul(entries.B, entries.C, d)
    return s_scale(AD - BC, entries.A.p)


def rationalizing_series(c: PadicNum, e_n: int, d: int, ctx: PrecisionContext) -> SeriesTrunc:
    """The polynomial (1 - c t^p)(1 - t)^(p e_n) modulo t^(d+1)."""
    one_minus_s = s_subst_frob(SeriesTrunc.constant(ctx.one(), d) - SeriesTrunc.monomial(ctx.one(), 1, d), c, d)
    return s_mul(s_binpow(ctx.p * e_n, d, ctx), one_minus_s, d)


def tail_coefficients(entry: SeriesTrunc, kind: EntryKind, c: PadicNum, ctx: PrecisionContext) -> list[PadicNum]:
    """Coefficients of the rationalized entry beyond its numerator degree bound.

    For kinds pA and pC the entry is multiplied by p. The coefficients returned
    run from the bound plus one up to the order of `entry`; they all vanish mod p^n.
    """
    d = entry.order
    numerator = s_mul(entry, rationalizing_series(c, ctx.e_n, d, ctx), d)
    if kind.carries_p:
        numerator = s_scale(numerator, ctx.p)
    bound = numerator_degree_bound(kind, ctx.p, ctx.e_n)
    return list(numerator.coeffs[bound + 1 :])


def e_value(a: RationalParam, b: RationalParam, alpha: PadicNum, c: PadicNum, ctx: PrecisionContext) -> PadicNum:
    """E(alpha) = (1-alpha)^m (1 + p u)^(a'+b'), where 1 + p u = (1-alpha)^p / (1 - c alpha^p).

    The second factor is summed as the binomial series in p u, which converges
    at every alpha with 1 - alpha a unit.

    Raises:
        InvalidPointError: 1 - alpha or 1 - c alpha^p is not a unit.
    """
    p = ctx.p
    m = exponent_defect(a, b, p)
    a1, b1 = dwork_prime(a, p), dwork_prime(b, p)
    one_minus_alpha = 1 - alpha
    one_minus_s = 1 - c * alpha**p
    if not (one_minus_alpha.is_unit and one_minus_s.is_unit):
        raise InvalidPointError(f"E is not evaluated at {alpha!r}: 1 - alpha must be a unit")
    pu = one_minus_alpha**p / one_minus_s - 1
    # (1 + pu)^r = (1 - (-pu))^r
    binomial = s_eval(s_binpow(a1.value + b1.value, ctx.nu, ctx), -pu)
    return one_minus_alpha**m * binomial
