"""Truncated power series over fixed-precision p-adic numbers.

Products are computed by lowering both operands to integer vectors sharing a
common power of p and a common modulus, convolving, and lifting the result
back. Each lowering keeps the smallest absolute precision of the operand, so a
series always carries a uniform lower bound on what is known.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from dworkhg.exceptions import InvalidParameterError, InvalidPointError, InvalidTwistError, NonUnitError
from dworkhg.padic.context import PrecisionContext
from dworkhg.padic.number import INFINITE_PRECISION, PadicNum, _normalize, divide_exact

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SeriesTrunc:
    """Power series known modulo t^(order+1)."""

    p: int
    coeffs: tuple[PadicNum, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> PadicNum:
        return self.coeffs[k]

    @classmethod
    def from_values(cls, ctx: PrecisionContext, values: Iterable[int | Fraction]) -> SeriesTrunc:
        return cls(ctx.p, tuple(ctx.from_fraction(v) for v in values))

    @classmethod
    def constant(cls, c: PadicNum, d: int) -> SeriesTrunc:
        return cls(c.p, (c,) + (PadicNum.zero(c.p),) * d)

    @classmethod
    def one(cls, ctx: PrecisionContext, d: int) -> SeriesTrunc:
        return cls.constant(ctx.one(), d)

    @classmethod
    def monomial(cls, c: PadicNum, degree: int, d: int) -> SeriesTrunc:
        """c * t^degree known mod t^(d+1)."""
        zero = PadicNum.zero(c.p)
        return cls(c.p, tuple(c if k == degree else zero for k in range(d + 1)))

    def residues(self, n: int) -> list[int]:
        return [c.residue(n) for c in self.coeffs]

    def __add__(self, other: SeriesTrunc) -> SeriesTrunc:
        return s_add(self, other)

    def __sub__(self, other: SeriesTrunc) -> SeriesTrunc:
        return s_sub(self, other)

    def __neg__(self) -> SeriesTrunc:
        return SeriesTrunc(self.p, tuple(-c for c in self.coeffs))


def _lower(f: SeriesTrunc, d: int) -> tuple[int, list[int], int] | None:
    """Write f mod t^(d+1) as p^shift * X known mod p^prec, X a list of integers.

    Returns None when every coefficient is an exact zero.
    """
    coeffs = f.coeffs[: d + 1]
    prec = min(c.prec for c in coeffs)
    if prec == INFINITE_PRECISION:
        return None
    p = f.p
    shift = min(c.v for c in coeffs)
    mod = p ** (prec - shift)
    ints = [0 if c.is_zero else c.u * p ** (c.v - shift) % mod for c in coeffs]
    return shift, ints, prec


def _raise(p: int, shift: int, ints: list[int], prec: int) -> SeriesTrunc:
    mod = p ** (prec - shift)
    return SeriesTrunc(p, tuple(_normalize(p, shift, z % mod, prec) for z in ints))


def s_add(f: SeriesTrunc, g: SeriesTrunc) -> SeriesTrunc:
    return SeriesTrunc(f.p, tuple(x + y for x, y in zip(f.coeffs, g.coeffs)))


def s_sub(f: SeriesTrunc, g: SeriesTrunc) -> SeriesTrunc:
    return SeriesTrunc(f.p, tuple(x - y for x, y in zip(f.coeffs, g.coeffs)))


def s_scale(f: SeriesTrunc, c: PadicNum | int | Fraction) -> SeriesTrunc:
    return SeriesTrunc(f.p, tuple(x * c for x in f.coeffs))


def s_divide_exact(f: SeriesTrunc, w: int) -> SeriesTrunc:
    return SeriesTrunc(f.p, tuple(divide_exact(x, w) for x in f.coeffs))


def s_truncate(f: SeriesTrunc, d: int) -> SeriesTrunc:
    return SeriesTrunc(f.p, f.coeffs[: d + 1])


def s_shift(f: SeriesTrunc, k: int) -> SeriesTrunc:
    """Multiply by t^k."""
    return SeriesTrunc(f.p, (PadicNum.zero(f.p),) * k + f.coeffs)


def s_derivative(f: SeriesTrunc) -> SeriesTrunc:
    return SeriesTrunc(f.p, tuple(c * k for k, c in enumerate(f.coeffs) if k > 0))


def s_mul(f: SeriesTrunc, g: SeriesTrunc, d: int) -> SeriesTrunc:
    """Product of f and g truncated at order d (schoolbook convolution)."""
    d = min(d, f.order, g.order)
    lowered_f = _lower(f, d)
    lowered_g = _lower(g, d)
    if lowered_f is None or lowered_g is None:
        return SeriesTrunc(f.p, (PadicNum.zero(f.p),) * (d + 1))
    e_f, xs, prec_f = lowered_f
    e_g, ys, prec_g = lowered_g

    zs = [0] * (d + 1)
    for i, x in enumerate(xs):
        if x:
            for j, y in enumerate(ys[: d + 1 - i]):
                zs[i + j] += x * y
    return _raise(f.p, e_f + e_g, zs, min(e_f + prec_g, prec_f + e_g))


def s_inv(f: SeriesTrunc, d: int) -> SeriesTrunc:
    """Inverse of f modulo t^(d+1) by the telescoping product (1+h)(1+h^2)(1+h^4)...

    Raises:
        NonUnitError: The constant term of f is not a unit.
    """
    d = min(d, f.order)
    c0 = f.coeffs[0]
    if not c0.is_unit:
        raise NonUnitError(f"Series with constant term {c0!r} is not invertible")
    c0_inv = c0.unit_inverse()
    normalized = s_scale(s_truncate(f, d), c0_inv)
    one = SeriesTrunc.constant(PadicNum(f.p, 0, 1, c0_inv.prec), d)
    # h = 1 - f/c0 has zero constant term, so h^(2^(j+1)) vanishes mod t^(d+1) once 2^(j+1) > d
    h = one - normalized
    result = one + h
    power = h
    for _ in range(d.bit_length() - 1):
        power = s_mul(power, power, d)
        result = s_mul(result, one + power, d)
    return s_scale(result, c0_inv)


def s_binpow(r: Fraction | int, d: int, ctx: PrecisionContext) -> SeriesTrunc:
    """(1-t)^r modulo t^(d+1) for a rational exponent r with p-free denominator.

    Raises:
        InvalidParameterError: p divides the denominator of r.
    """
    r = Fraction(r)
    num, den = r.numerator, r.denominator
    if den % ctx.p == 0:
        raise InvalidParameterError(f"Exponent {r} has a denominator divisible by p={ctx.p}")
    coeffs = [ctx.one()]
    for k in range(d):
        # (-1)^(k+1) binom(r, k+1) = (-1)^k binom(r, k) * (k*den - num) / (den*(k+1))
        coeffs.append(divide_exact(coeffs[-1] * (k * den - num), den * (k + 1)))
    return SeriesTrunc(ctx.p, tuple(coeffs))


def s_subst_frob(f: SeriesTrunc, c: PadicNum, d: int) -> SeriesTrunc:
    """f(c t^p) modulo t^(d+1), for c = 1 mod p.

    Raises:
        InvalidTwistError: c is not congruent to 1 mod p.
    """
    p = f.p
    if not (c.is_unit and (c - 1).residue(1) == 0):
        raise InvalidTwistError(f"Twist {c!r} is not congruent to 1 mod {p}")
    d = min(d, p * (f.order + 1) - 1)
    zero = PadicNum.zero(p)
    coeffs = [zero] * (d + 1)
    c_power = None
    for k, fk in enumerate(f.coeffs):
        if p * k > d:
            break
        coeffs[p * k] = fk if c_power is None else fk * c_power
        c_power = c if c_power is None else c_power * c
    return SeriesTrunc(p, tuple(coeffs))


def s_integrate(h: SeriesTrunc) -> SeriesTrunc:
    """The series sum h_k t^(k+1)/(k+1), with zero constant term."""
    return SeriesTrunc(
        h.p,
        (PadicNum.zero(h.p),) + tuple(divide_exact(c, k + 1) for k, c in enumerate(h.coeffs)),
    )


def s_eval(f: SeriesTrunc, x: PadicNum | int) -> PadicNum:
    """Horner evaluation at an integral point.

    Raises:
        InvalidPointError: x has negative valuation.
    """
    if isinstance(x, PadicNum) and not x.is_zero and x.v < 0:
        raise InvalidPointError(f"Cannot evaluate a power series at {x!r}, which is not integral")
    acc = f.coeffs[-1]
    for c in reversed(f.coeffs[:-1]):
        acc = acc * x + c
    return acc
