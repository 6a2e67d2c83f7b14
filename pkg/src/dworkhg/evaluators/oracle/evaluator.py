"""Brute-force evaluation through Dwork's congruences.

Every value here comes from truncations of the hypergeometric series at degree
p^n, so the cost grows like p^n. These evaluators are the reference against
which the Frobenius solver is checked.
"""
import logging
from itertools import islice

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_from_int_poly, gf_mul, gf_pow

from dworkhg.evaluators.base_evaluator import BaseEvaluator, ParamLike, PointLike
from dworkhg.evaluators.oracle.schemas import ConditionReport, OracleBudget
from dworkhg.exceptions import BudgetExceededError, ConditionViolatedError, InvalidParameterError, InvalidPointError
from dworkhg.frobenius.entries import pochhammer_coefficients
from dworkhg.padic.context import PrecisionContext, ctx_new
from dworkhg.padic.number import PadicNum
from dworkhg.special.dwork import RationalParam, dwork_orbit, dwork_prime

logger = logging.getLogger(__name__)


def _enforce_budget(p: int, n: int, terms: int, budget: OracleBudget) -> None:
    if n > budget.n_max:
        raise BudgetExceededError(f"Oracle precision n={n} exceeds the budget n_max={budget.n_max}")
    if terms > budget.max_terms:
        raise BudgetExceededError(
            f"Oracle sum of {terms} terms for p={p}, n={n} exceeds the budget of {budget.max_terms} terms"
        )


def _truncated_residues(a: RationalParam, b: RationalParam, count: int, ctx: PrecisionContext) -> list[int]:
    """Coefficients c_0..c_(count-1) of F_ab as integers mod p^n."""
    return [c.residue(ctx.n) for c in islice(pochhammer_coefficients(a, b, ctx), count)]


def _point_residue(alpha: PadicNum | int, n: int, p: int) -> int:
    x = alpha.residue(n) if isinstance(alpha, PadicNum) else alpha % p**n
    if x % p in (0, 1):
        raise InvalidPointError(f"Evaluation point {alpha} must have residue other than 0 and 1 mod {p}")
    return x


def _horner(coefficients: list[int], x: int, modulus: int) -> int:
    acc = 0
    for c in reversed(coefficients):
        acc = (acc * x + c) % modulus
    return acc


def check_condition(a: RationalParam, b: RationalParam, alpha: PadicNum | int, p: int) -> ConditionReport:
    """Check that F_(a^(i), b^(i))(t) truncated below degree p is nonzero at alpha mod p for the whole orbit."""
    x = alpha.residue(1) if isinstance(alpha, PadicNum) else alpha % p
    ctx = ctx_new(p, 1, guard=0)
    for i, (ai, bi) in enumerate(dwork_orbit(a, b, p)):
        coefficients = [c.residue(1) for c in islice(pochhammer_coefficients(ai, bi, ctx), p)]
        if _horner(coefficients, x, p) == 0:
            logger.debug(f"Condition fails at orbit index {i} ({ai}, {bi}) for alpha = {x} mod {p}")
            return ConditionReport(ok=False, failing_index=i)
    return ConditionReport(ok=True)


def require_condition(a: RationalParam, b: RationalParam, alpha: PadicNum | int, p: int) -> None:
    """Raise ConditionViolatedError when check_condition fails."""
    report = check_condition(a, b, alpha, p)
    if not report.ok:
        raise ConditionViolatedError(
            f"F_({a}, {b}) orbit index {report.failing_index}: truncated series vanishes at the point mod {p}",
            index=report.failing_index,
        )


def oracle_dwork(
    a: RationalParam,
    b: RationalParam,
    alpha: PadicNum | int,
    c: PadicNum | int,
    n: int,
    p: int,
    budget: OracleBudget | None = None,
) -> PadicNum:
    """F_ab(t)_(<p^n) / [F_a'b'(c t^p)]_(<p^n) at alpha, mod p^n."""
    budget = budget or OracleBudget()
    _enforce_budget(p, n, p**n, budget)
    _point_residue(alpha, 1, p)
    require_condition(a, b, alpha, p)
    ctx = ctx_new(p, n, guard=0)
    modulus = p**n
    x = _point_residue(alpha, n, p)
    c = c.residue(n) if isinstance(c, PadicNum) else c % modulus
    a1, b1 = dwork_prime(a, p), dwork_prime(b, p)

    numerator = _horner(_truncated_residues(a, b, p**n, ctx), x, modulus)
    denominator = _horner(_truncated_residues(a1, b1, p ** (n - 1), ctx), c * pow(x, p, modulus), modulus)
    return PadicNum.from_int(p, numerator, n) / PadicNum.from_int(p, denominator, n)


def oracle_df(
    a: RationalParam,
    b: RationalParam,
    alpha: PadicNum | int,
    n: int,
    p: int,
    j: int = 1,
    budget: OracleBudget | None = None,
) -> PadicNum:
    """The truncated ratio F^(j)(t)_(<p^n) / F(t)_(<p^n) at alpha, mod p^n."""
    if j < 1:
        raise InvalidParameterError(f"Derivative order must be positive, got j={j}")
    budget = budget or OracleBudget()
    _enforce_budget(p, n, p**n + j, budget)
    _point_residue(alpha, 1, p)
    require_condition(a, b, alpha, p)
    ctx = ctx_new(p, n, guard=0)
    modulus = p**n
    x = _point_residue(alpha, n, p)

    coefficients = _truncated_residues(a, b, p**n + j, ctx)
    derivative = []
    for k in range(p**n):
        falling = 1
        for i in range(1, j + 1):
            falling *= k + i
        derivative.append(falling * coefficients[k + j] % modulus)
    numerator = _horner(derivative, x, modulus)
    denominator = _horner(coefficients[: p**n], x, modulus)
    return PadicNum.from_int(p, numerator, n) / PadicNum.from_int(p, denominator, n)


def oracle_psi(i: int, N: int, p: int, j: int, budget: OracleBudget | None = None) -> PadicNum:
    """psi~(i/N) mod p^j from the limit of sum_{1 <= k < m, p does not divide k} 1/k as m -> i/N."""
    if N % p == 0:
        raise InvalidParameterError(f"p={p} divides the denominator N={N}")
    budget = budget or OracleBudget()
    # two guard digits absorb the convergence rate of the limit
    depth = j + 2
    _enforce_budget(p, 1, p**depth, budget)
    m = i * pow(N, -1, p**depth) % p**depth
    modulus = p**j
    total = 0
    for k in range(1, m):
        if k % p:
            total += pow(k, -1, modulus)
    return PadicNum.from_int(p, total % modulus, j)


def oracle_factorization_check(a: RationalParam, b: RationalParam, n: int, p: int) -> bool:
    """Check F_ab(t)_(<p^n) = prod_i (F_(a^(i), b^(i))(t)_(<p))^(p^i) mod p."""
    ctx = ctx_new(p, 1, guard=0)
    orbit = dwork_orbit(a, b, p)

    def residues_mod_p(ai: RationalParam, bi: RationalParam, count: int) -> list[int]:
        low_first = [c.residue(1) for c in islice(pochhammer_coefficients(ai, bi, ctx), count)]
        return gf_from_int_poly(list(reversed(low_first)), p)

    lhs = residues_mod_p(a, b, p**n)
    rhs = [1]
    for i in range(n):
        ai, bi = orbit[i % len(orbit)]
        rhs = gf_mul(rhs, gf_pow(residues_mod_p(ai, bi, p), p**i, p, ZZ), p, ZZ)
    return lhs == rhs


class OracleEvaluator(BaseEvaluator):
    """Evaluator that sums the truncated series of Dwork's congruences directly"""

    method = "oracle"

    def __init__(self, p: int, n: int, guard: int | None = None, budget: OracleBudget | None = None):
        """Initialize the oracle evaluator.

        Args:
            p: The odd prime.
            n: Target precision exponent.
            guard: Guard digits for the precision policy.
            budget: Size limits of the truncated sums.
        """
        super().__init__(p=p, n=n, guard=guard)
        self.budget = budget or OracleBudget()

    def dwork_value(self, a: ParamLike, b: ParamLike, alpha: PointLike, c: PointLike = 1) -> PadicNum:
        a, b = self.params(a, b)
        alpha, c = self.point(alpha), self.twist(c)
        return oracle_dwork(a, b, alpha, c, self.n, self.p, self.budget)

    def df_value(self, a: ParamLike, b: ParamLike, beta: PointLike, k: int = 0) -> PadicNum:
        a, b = self.params(a, b)
        beta = self.point(beta)
        orbit = dwork_orbit(a, b, self.p)
        ak, bk = orbit[k % len(orbit)]
        return oracle_df(ak, bk, beta, self.n, self.p, budget=self.budget)
