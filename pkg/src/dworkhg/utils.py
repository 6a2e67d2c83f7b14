import re
from fractions import Fraction
from math import gcd

from dworkhg.exceptions import InvalidParameterError

FRACTION_PATTERN = re.compile(r"^\s*(-?\d+)\s*/\s*(-?\d+)\s*$")


def parse_fraction(text: str) -> Fraction:
    """Parse a reduced fraction "num/den" with den > 0 (a bare integer is also accepted)."""
    match = FRACTION_PATTERN.match(text)
    if match is None:
        try:
            return Fraction(int(text.strip()))
        except ValueError:
            raise InvalidParameterError(f'Expected a fraction "num/den", got: {text!r}')
    num, den = int(match.group(1)), int(match.group(2))
    if den <= 0:
        raise InvalidParameterError(f"Denominator must be positive in {text!r}")
    if gcd(num, den) != 1:
        raise InvalidParameterError(f"Fraction {text!r} is not reduced")
    return Fraction(num, den)


def base_p_digits(value: int, p: int, n: int) -> list[int]:
    """The n base-p digits of value mod p^n, least significant first."""
    digits = []
    value %= p**n
    for _ in range(n):
        value, digit = divmod(value, p)
        digits.append(digit)
    return digits
