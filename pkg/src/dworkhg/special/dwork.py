"""Hypergeometric parameters and their Dwork-prime orbits."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from pydantic import BaseModel, ConfigDict, Field

from dworkhg.exceptions import InvalidParameterError
from dworkhg.utils import parse_fraction


class RationalParam(BaseModel):
    """A reduced rational number num/den with den > 0."""

    model_config = ConfigDict(frozen=True)

    num: int = Field(description="Numerator.")
    den: int = Field(description="Positive denominator, coprime to the numerator.")

    @classmethod
    def of(cls, value: Fraction | int | str) -> RationalParam:
        if isinstance(value, str):
            value = parse_fraction(value)
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def validate_param(a: RationalParam, p: int, *, top_level: bool = True) -> None:
    """Check the preconditions shared by every operation taking a parameter.

    Raises:
        InvalidParameterError: The fraction is not reduced, p divides its
            denominator or, for top-level inputs, it lies outside (0, 1).
    """
    if a.den <= 0 or gcd(a.num, a.den) != 1:
        raise InvalidParameterError(f"Parameter {a} is not a reduced fraction with positive denominator")
    if a.den % p == 0:
        raise InvalidParameterError(f"p={p} divides the denominator of {a}")
    if top_level and not 0 < a.num < a.den:
        raise InvalidParameterError(f"Parameter {a} must lie strictly between 0 and 1")


def dwork_prime(a: RationalParam, p: int) -> RationalParam:
    """The Dwork prime (a+k)/p, where k in [0, p-1] makes a+k divisible by p."""
    if a.den % p == 0:
        raise InvalidParameterError(f"p={p} divides the denominator of {a}")
    k = -a.num * pow(a.den, -1, p) % p
    return RationalParam(num=(a.num + k * a.den) // p, den=a.den)


def dwork_orbit(a: RationalParam, b: RationalParam, p: int) -> list[tuple[RationalParam, RationalParam]]:
    """The pairs (a^(i), b^(i)) for i = 0..m-1, where m is the orbit length."""
    orbit = [(a, b)]
    while True:
        a, b = dwork_prime(a, p), dwork_prime(b, p)
        if (a, b) == orbit[0]:
            return orbit
        orbit.append((a, b))


def orbit_length(a: RationalParam, b: RationalParam, p: int) -> int:
    return len(dwork_orbit(a, b, p))
