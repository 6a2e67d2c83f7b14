"""The unramified extension Z_p[x]/(H(x)) holding the L-th roots of unity.

Elements are dense integer polynomials in sympy's galoistools layout (highest
degree first), reduced modulo H and modulo p^nu.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from pydantic import BaseModel, ConfigDict, Field
from sympy import cyclotomic_poly, n_order
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add,
    gf_edf_zassenhaus,
    gf_from_int_poly,
    gf_mul,
    gf_mul_ground,
    gf_neg,
    gf_pow_mod,
    gf_rem,
    gf_sub,
)

from dworkhg.exceptions import InvalidParameterError, InvalidPointError, NonUnitError
from dworkhg.frobenius.bounds import ceil_log
from dworkhg.padic.number import PadicNum, valuation

logger = logging.getLogger(__name__)


class ZqContext(BaseModel):
    """Unramified extension of degree f generated by a root of the cyclotomic factor H."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(description="The prime.")
    L: int = Field(description="Order of the roots of unity the extension must contain.")
    f: int = Field(description="Multiplicative order of p modulo L; the degree of the extension.")
    H: tuple[int, ...] = Field(description="Monic modulus polynomial, coefficients highest degree first.")
    nu: int = Field(description="Precision exponent of every coefficient.")

    @property
    def modulus(self) -> int:
        return self.p**self.nu

    @property
    def q(self) -> int:
        return self.p**self.f

    def element(self, poly: list[int]) -> ZqElem:
        reduced = gf_rem(gf_from_int_poly(poly, self.modulus), list(self.H), self.modulus, ZZ)
        return ZqElem(self, tuple(reduced))

    def constant(self, m: int) -> ZqElem:
        return self.element([m])

    def generator(self) -> ZqElem:
        """The class of x."""
        return self.element([1, 0])


@lru_cache(maxsize=64)
def zq_init(L: int, p: int, nu: int) -> ZqContext:
    """Build Z_q = Z_p[x]/(H) where H is an irreducible factor of the L-th cyclotomic polynomial mod p.

    The factor with the smallest coefficient vector is chosen so the context is
    reproducible whatever the splitting randomness does.

    Raises:
        InvalidParameterError: p divides L.
    """
    if L < 1 or L % p == 0:
        raise InvalidParameterError(f"Root of unity order L={L} must be positive and prime to p={p}")
    f = 1 if L == 1 else int(n_order(p, L))
    phi = gf_from_int_poly([int(c) for c in cyclotomic_poly(L, polys=True).all_coeffs()], p)
    factors = gf_edf_zassenhaus(phi, f, p, ZZ)
    H = min(tuple(int(c) for c in factor) for factor in factors)
    logger.debug(f"Z_q context for L={L}, p={p}: f={f}, H={H}")
    return ZqContext(p=p, L=L, f=f, H=H, nu=nu)


@dataclass(frozen=True, slots=True, eq=False)
class ZqElem:
    ctx: ZqContext
    poly: tuple[int, ...]

    def coordinates(self) -> list[int]:
        """Coefficients of 1, x, ..., x^(f-1)."""
        coords = list(reversed(self.poly))
        return coords + [0] * (self.ctx.f - len(coords))

    def constant_term(self) -> int:
        return self.coordinates()[0]

    def is_unit(self) -> bool:
        p = self.ctx.p
        return any(c % p for c in self.poly)

    def _wrap(self, poly: list[int]) -> ZqElem:
        return ZqElem(self.ctx, tuple(gf_rem(poly, list(self.ctx.H), self.ctx.modulus, ZZ)))

    def __add__(self, other: ZqElem) -> ZqElem:
        return ZqElem(self.ctx, tuple(gf_add(list(self.poly), list(other.poly), self.ctx.modulus, ZZ)))

    def __sub__(self, other: ZqElem) -> ZqElem:
        return ZqElem(self.ctx, tuple(gf_sub(list(self.poly), list(other.poly), self.ctx.modulus, ZZ)))

    def __neg__(self) -> ZqElem:
        return ZqElem(self.ctx, tuple(gf_neg(list(self.poly), self.ctx.modulus, ZZ)))

    def __mul__(self, other: ZqElem | int) -> ZqElem:
        if isinstance(other, int):
            return ZqElem(self.ctx, tuple(gf_mul_ground(list(self.poly), other, self.ctx.modulus, ZZ)))
        return self._wrap(gf_mul(list(self.poly), list(other.poly), self.ctx.modulus, ZZ))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ZqElem:
        if e < 0:
            return self.inverse() ** (-e)
        return ZqElem(
            self.ctx, tuple(gf_pow_mod(list(self.poly), e, list(self.ctx.H), self.ctx.modulus, ZZ))
        )

    def inverse(self) -> ZqElem:
        """Inverse of a unit: the F_q inverse u^(q-2), then Newton steps y <- y(2 - u y)."""
        if not self.is_unit():
            raise NonUnitError(f"{self!r} is not a unit of Z_q")
        ctx, p = self.ctx, self.ctx.p
        residue = gf_from_int_poly(list(self.poly), p)
        H_mod_p = gf_from_int_poly(list(ctx.H), p)
        y = ctx.element(gf_pow_mod(residue, ctx.q - 2, H_mod_p, p, ZZ))
        two = ctx.constant(2)
        digits = 1
        while digits < ctx.nu:
            y = y * (two - self * y)
            digits *= 2
        return y

    def divide_by_p(self) -> ZqElem:
        p = self.ctx.p
        if any(c % p for c in self.poly):
            raise NonUnitError(f"{self!r} is not divisible by p")
        return ZqElem(self.ctx, tuple(c // p for c in self.poly))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ctx.constant(other)
        if not isinstance(other, ZqElem):
            return NotImplemented
        return (self - other).poly in ((), (0,))

    __hash__ = None

    def __repr__(self) -> str:
        return f"ZqElem({self.coordinates()} mod {self.ctx.p}^{self.ctx.nu})"


def teichmuller(x: ZqElem) -> ZqElem:
    """The (q-1)-th root of unity congruent to x mod p, by iterating y <- y^q."""
    if not x.is_unit():
        raise NonUnitError(f"Teichmuller lift of a non-unit {x!r}")
    y = x
    for _ in range(x.ctx.nu):
        y_next = y ** x.ctx.q
        if y_next == y:
            break
        y = y_next
    return y


def _series_cutoff(p: int, nu: int, offset: int) -> int:
    """Smallest k with k - offset - floor(log_p k) >= nu, plus two slack terms."""
    k = 1
    # floor(log_p k) = ceil_log(p, k + 1) - 1
    while k - offset - (ceil_log(p, k + 1) - 1) < nu:
        k += 1
    return k + 2


def _log_of_one_plus_p_multiple(y1: ZqElem, offset: int) -> ZqElem:
    """sum_k p^(k - offset - v_p(k)) y1^k / k0 for k >= 1, where k = p^v_p(k) k0."""
    ctx, p = y1.ctx, y1.ctx.p
    mod = ctx.modulus
    total = ctx.constant(0)
    power = ctx.constant(1)
    for k in range(1, _series_cutoff(p, ctx.nu, offset) + 1):
        power = power * y1
        e = valuation(p, k)
        exponent = k - offset - e
        if exponent >= ctx.nu:
            continue
        k0 = k // p**e
        factor = p**exponent * pow(k0, -1, mod) % mod
        total = total + power * factor
    return total


def iwasawa_log(u: ZqElem) -> ZqElem:
    """Iwasawa logarithm of a unit: log(u / omega(u)), zero on roots of unity.

    Raises:
        InvalidPointError: u is not a unit.
    """
    if not u.is_unit():
        raise InvalidPointError(f"Iwasawa logarithm is only evaluated at units, got {u!r}")
    x = u * teichmuller(u).inverse()
    # log(x) = -sum (1-x)^k / k with 1 - x = p*y1
    y1 = (x.ctx.constant(1) - x).divide_by_p()
    return -_log_of_one_plus_p_multiple(y1, offset=0)


def padic_log(x: PadicNum, nu: int | None = None) -> PadicNum:
    """Iwasawa logarithm of a unit of Z_p."""
    if not x.is_unit:
        raise InvalidPointError(f"p-adic logarithm is only evaluated at units, got {x!r}")
    nu = min(x.prec, nu or x.prec)
    ctx = zq_init(1, x.p, nu)
    return PadicNum.from_int(x.p, iwasawa_log(ctx.constant(x.residue(nu))).constant_term(), nu)


def ln1p(z: ZqElem) -> ZqElem:
    """The p-adic dilogarithm-type function -p^(-1) log((1-z)^p / (1-z^p)) at a root of unity z != 1.

    The value is correct modulo p^(nu-1) of z's context.

    Raises:
        InvalidParameterError: z is 1 mod p or not an L-th root of unity.
    """
    ctx = z.ctx
    one = ctx.constant(1)
    if z ** ctx.L != one:
        raise InvalidParameterError(f"{z!r} is not a {ctx.L}-th root of unity")
    one_minus_z = one - z
    if not one_minus_z.is_unit():
        raise InvalidParameterError("ln1p has a pole at z = 1")
    ratio = one_minus_z ** ctx.p * (one - z ** ctx.p).inverse()
    w = (one - ratio).divide_by_p()
    # -p^(-1) log(1 - p w) = sum_k p^(k-1) w^k / k
    return _log_of_one_plus_p_multiple(w, offset=1)
