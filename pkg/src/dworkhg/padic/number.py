"""Fixed-precision p-adic numbers stored as p^v * u, known modulo p^prec."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import multiplicity

from dworkhg.exceptions import InternalConsistencyError, NonUnitError

INFINITE_PRECISION = math.inf


def valuation(p: int, m: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if m % p:
        return 0
    return int(multiplicity(p, abs(m)))


@dataclass(frozen=True, slots=True, eq=False)
class PadicNum:
    """A p-adic number p^v * u known modulo p^prec.

    `prec` is the absolute precision. For a nonzero value `u` is a unit
    reduced modulo p^(prec - v). Zero is stored with u = 0 and v = prec, so
    an exact zero has infinite valuation and infinite precision.
    """

    p: int
    v: int | float
    u: int
    prec: int | float

    @classmethod
    def zero(cls, p: int, prec: int | float = INFINITE_PRECISION) -> PadicNum:
        return cls(p, prec, 0, prec)

    @classmethod
    def from_int(cls, p: int, m: int, prec: int) -> PadicNum:
        if m == 0:
            return cls.zero(p, prec)
        e = valuation(p, m)
        if e >= prec:
            return cls.zero(p, prec)
        return cls(p, e, (m // p**e) % p ** (prec - e), prec)

    @classmethod
    def from_fraction(cls, p: int, q: Fraction | int, prec: int) -> PadicNum:
        q = Fraction(q)
        if q == 0:
            return cls.zero(p, prec)
        if q.denominator == 1:
            return cls.from_int(p, q.numerator, prec)
        e_num = valuation(p, q.numerator)
        e_den = valuation(p, q.denominator)
        e = e_num - e_den
        if e >= prec:
            return cls.zero(p, prec)
        mod = p ** (prec - e)
        num0 = q.numerator // p**e_num
        den0 = q.denominator // p**e_den
        return cls(p, e, num0 * pow(den0, -1, mod) % mod, prec)

    @property
    def is_zero(self) -> bool:
        return self.u == 0

    @property
    def is_unit(self) -> bool:
        return self.u != 0 and self.v == 0

    @property
    def k(self) -> int | float:
        """Relative precision of the unit part."""
        return 0 if self.is_zero else self.prec - self.v

    def with_precision(self, prec: int) -> PadicNum:
        """Forget every digit at or beyond p^prec."""
        if prec >= self.prec:
            return self
        if self.is_zero or self.v >= prec:
            return PadicNum.zero(self.p, prec)
        return PadicNum(self.p, self.v, self.u % self.p ** (prec - self.v), prec)

    def residue(self, n: int | None = None) -> int:
        """Canonical representative in [0, p^n) of an integral value."""
        n = self.prec if n is None else n
        if n > self.prec:
            raise InternalConsistencyError(
                f"Precision exhausted: value known mod {self.p}^{self.prec}, requested {self.p}^{n}"
            )
        if self.is_zero:
            return 0
        if self.v < 0:
            raise InternalConsistencyError(f"Value {self!r} is not integral")
        return self.u * self.p**self.v % self.p**n

    def lift(self) -> int:
        return self.residue()

    # arithmetic

    def _coerce(self, other) -> PadicNum:
        if isinstance(other, PadicNum):
            if other.p != self.p:
                raise ValueError(f"Cannot combine {self.p}-adic and {other.p}-adic numbers")
            return other
        if isinstance(other, (int, Fraction)):
            if self.prec == INFINITE_PRECISION:
                raise TypeError("An exact zero has no precision to coerce a rational into")
            return PadicNum.from_fraction(self.p, other, self.prec)
        return NotImplemented

    def __add__(self, other) -> PadicNum:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        x, p = self, self.p
        prec = min(x.prec, y.prec)
        if x.is_zero:
            return y.with_precision(prec)
        if y.is_zero:
            return x.with_precision(prec)
        v0 = min(x.v, y.v)
        if v0 >= prec:
            return PadicNum.zero(p, prec)
        mod = p ** (prec - v0)
        s = (x.u * p ** (x.v - v0) + y.u * p ** (y.v - v0)) % mod
        return _normalize(p, v0, s, prec)

    __radd__ = __add__

    def __neg__(self) -> PadicNum:
        if self.is_zero:
            return self
        return PadicNum(self.p, self.v, -self.u % self.p**self.k, self.prec)

    def __sub__(self, other) -> PadicNum:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other) -> PadicNum:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return y + (-self)

    def _scale(self, m: int) -> PadicNum:
        """Exact multiplication by an integer."""
        if m == 0:
            return PadicNum.zero(self.p)
        e = valuation(self.p, m)
        if self.is_zero:
            return PadicNum.zero(self.p, self.prec + e)
        m0 = m // self.p**e
        return PadicNum(self.p, self.v + e, self.u * m0 % self.p**self.k, self.prec + e)

    def __mul__(self, other) -> PadicNum:
        if isinstance(other, int):
            return self._scale(other)
        if isinstance(other, Fraction):
            return divide_exact(self._scale(other.numerator), other.denominator)
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        x, p = self, self.p
        prec = min(x.prec + y.v, y.prec + x.v)
        if x.is_zero or y.is_zero:
            return PadicNum.zero(p, prec)
        k = min(x.k, y.k)
        return PadicNum(p, x.v + y.v, x.u * y.u % p**k, prec)

    __rmul__ = __mul__

    def inverse(self) -> PadicNum:
        if self.is_zero:
            raise NonUnitError("Cannot invert a p-adic zero")
        k = self.k
        return PadicNum(self.p, -self.v, pow(self.u, -1, self.p**k), k - self.v)

    def unit_inverse(self) -> PadicNum:
        if not self.is_unit:
            raise NonUnitError(f"{self!r} is not a p-adic unit")
        return self.inverse()

    def __truediv__(self, other) -> PadicNum:
        if isinstance(other, int):
            return divide_exact(self, other)
        if isinstance(other, Fraction):
            return divide_exact(self._scale(other.denominator), other.numerator)
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        if y.is_zero:
            raise NonUnitError("Division by a p-adic zero")
        if self.is_zero:
            return PadicNum.zero(self.p, self.prec - y.v)
        return self * y.inverse()

    def __rtruediv__(self, other) -> PadicNum:
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return y / self

    def __pow__(self, e: int) -> PadicNum:
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            if self.is_zero:
                raise ValueError("0**0 is undefined for a p-adic zero")
            return PadicNum(self.p, 0, 1 % self.p**self.k, self.k)
        if self.is_zero:
            return PadicNum.zero(self.p, self.prec * e)
        k = self.k
        return PadicNum(self.p, self.v * e, pow(self.u, e, self.p**k), self.v * e + k)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)) and self.prec == INFINITE_PRECISION:
            return self.is_zero and other == 0
        y = self._coerce(other)
        if y is NotImplemented:
            return NotImplemented
        return (self - y).is_zero

    __hash__ = None

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicNum(0 + O({self.p}^{self.prec}))"
        return f"PadicNum({self.p}^{self.v}*{self.u} + O({self.p}^{self.prec}))"


def _normalize(p: int, v0: int, s: int, prec: int) -> PadicNum:
    """Build p^v0 * s known mod p^prec, moving factors of p out of s."""
    if s == 0:
        return PadicNum.zero(p, prec)
    e = valuation(p, s)
    v = v0 + e
    return PadicNum(p, v, (s // p**e) % p ** (prec - v), prec)


class RingOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    NEG = "neg"
    POW_INT = "pow_int"


def ring_ops(x: PadicNum, y: PadicNum | int | None, op: RingOp) -> PadicNum:
    """Apply a ring operation; for POW_INT `y` is the integer exponent."""
    match op:
        case RingOp.ADD:
            return x + y
        case RingOp.SUB:
            return x - y
        case RingOp.MUL:
            return x * y
        case RingOp.NEG:
            return -x
        case RingOp.POW_INT:
            return x**y
    raise ValueError(f"Unsupported ring operation: {op}")


def unit_inverse(x: PadicNum) -> PadicNum:
    """Inverse of a unit at the unit's own precision."""
    return x.unit_inverse()


def divide_exact(x: PadicNum, w: int) -> PadicNum:
    """Divide by a nonzero integer, lowering the valuation by v_p(w)."""
    if w == 0:
        raise NonUnitError("Division by the integer 0")
    e = valuation(x.p, w)
    if x.is_zero:
        return PadicNum.zero(x.p, x.prec - e)
    w0 = w // x.p**e
    mod = x.p**x.k
    return PadicNum(x.p, x.v - e, x.u * pow(w0, -1, mod) % mod, x.prec - e)
