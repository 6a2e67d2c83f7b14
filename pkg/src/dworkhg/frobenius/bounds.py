"""Degree bounds of the rationalized Frobenius entries and the precision policy."""
from enum import Enum

from sympy import multiplicity

PRECISION_SLACK = 4


class EntryKind(Enum):
    """The four entries of the Frobenius matrix [[pA, B], [pC, D]]."""

    PA = "pA"
    B = "B"
    PC = "pC"
    D = "D"

    @property
    def carries_p(self) -> bool:
        return self in (EntryKind.PA, EntryKind.PC)


def e_bound(p: int, n: int) -> tuple[int, int]:
    """Return e_n = max{k >= 1 : k - v_p(k!) < n} and the series degree D* = p*e_n + 2p.

    e_n is 0 when no k qualifies (this only happens for n = 1).

    Args:
        p: An odd prime.
        n: The target precision exponent.

    Returns:
        The pair (e_n, D*).
    """
    best = 0
    vp_factorial = 0
    # k - v_p(k!) >= (k(p-2)+1)/(p-1), so no k beyond this limit qualifies
    k_limit = (n * (p - 1)) // (p - 2) + 1
    for k in range(1, k_limit + 1):
        vp_factorial += multiplicity(p, k)
        if k - vp_factorial < n:
            best = k
    return best, p * best + 2 * p


def numerator_degree_bound(kind: EntryKind, p: int, e_n: int) -> int:
    """Degree of the numerator polynomial of an entry over (1-t^sigma)(1-t)^(p e_n)."""
    base = p * e_n
    return {
        EntryKind.PA: base + p,
        EntryKind.B: base + 2 * p,
        EntryKind.PC: base + p - 1,
        EntryKind.D: base + 2 * p - 1,
    }[kind]


def ceil_log(p: int, x: int) -> int:
    """Smallest e >= 0 with p^e >= x."""
    e, power = 0, 1
    while power < x:
        power *= p
        e += 1
    return e


def working_precision(p: int, n: int, guard: int) -> int:
    """Working exponent nu = n + 2*ceil(log_p(D*+1)) + 4, raised to n + guard when guard is larger."""
    _, degree = e_bound(p, n)
    return max(n + 2 * ceil_log(p, degree + 1) + PRECISION_SLACK, n + guard)
