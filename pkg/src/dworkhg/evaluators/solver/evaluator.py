import logging
from collections import OrderedDict

import numpy as np

from dworkhg.config import DEFAULT_EIGEN_METHOD, EigenMethods
from dworkhg.evaluators.base_evaluator import BaseEvaluator, ParamLike, PointLike
from dworkhg.evaluators.oracle.evaluator import require_condition
from dworkhg.evaluators.solver.eigen import chain_product, determinant, unit_eigen
from dworkhg.evaluators.solver.schemas import EvalPoint, FrobMatrix
from dworkhg.exceptions import InternalConsistencyError, InvalidParameterError, InvalidPointError
from dworkhg.frobenius.bounds import EntryKind, numerator_degree_bound
from dworkhg.frobenius.entries import abcd_series, e_value, rationalizing_series
from dworkhg.frobenius.schemas import FrobeniusEntrySet, TwistConfig
from dworkhg.padic.context import PrecisionContext
from dworkhg.padic.number import PadicNum
from dworkhg.series.truncated import SeriesTrunc, s_eval, s_mul
from dworkhg.special.dwork import RationalParam, dwork_orbit

logger = logging.getLogger(__name__)

ENTRY_CACHE_SIZE = 32


def step1_eval(entry: SeriesTrunc, kind: EntryKind, beta: PadicNum, c: PadicNum, ctx: PrecisionContext) -> PadicNum:
    """Evaluate an entry at beta through its rationalization over (1 - c t^p)(1 - t)^(p e_n).

    The numerator is truncated at the degree bound of `kind`, evaluated by
    Horner's rule and divided by the denominator at beta. Entries pA and pC are
    multiplied by p here.

    Raises:
        InvalidPointError: beta is not a unit or beta = 1 mod p.
    """
    p = ctx.p
    if not beta.is_unit or not (1 - beta).is_unit:
        raise InvalidPointError(f"Frobenius entries are not evaluated at {beta!r}: need a unit with residue != 1")
    bound = numerator_degree_bound(kind, p, ctx.e_n)
    if entry.order < bound:
        raise InvalidParameterError(f"Entry {kind.value} is known to degree {entry.order}, below its bound {bound}")

    numerator = s_mul(entry, rationalizing_series(c, ctx.e_n, bound, ctx), bound)
    denominator = (1 - c * beta**p) * (1 - beta) ** (p * ctx.e_n)
    value = s_eval(numerator, beta) / denominator
    if kind.carries_p:
        value = value * p
    return value.with_precision(ctx.n)


def _check_valuation(det: PadicNum, expected: int, label: str) -> None:
    # a zero known only below p^expected cannot contradict the valuation
    if det.is_zero:
        if det.prec > expected:
            raise InternalConsistencyError(f"{label} vanishes mod p^{det.prec}; expected valuation {expected}")
    elif det.v != expected:
        raise InternalConsistencyError(f"{label} has valuation {det.v}; expected {expected}")


def h_matrix(entries: FrobeniusEntrySet, beta: PadicNum, ctx: PrecisionContext) -> FrobMatrix:
    """The Frobenius matrix [[pA, B], [pC, D]] of one orbit index evaluated at beta."""
    values = tuple(step1_eval(entries.entry(kind), kind, beta, entries.twist.c, ctx) for kind in EntryKind)
    matrix = FrobMatrix(k=entries.k, entries=values)
    _check_valuation(matrix.determinant(), 1, f"det H^({entries.k})")
    return matrix


def chain_determinant_check(P: np.ndarray, m: int, ctx: PrecisionContext) -> bool:
    """Check det(P) has valuation m and report whether it equals p^m.

    Returns:
        True when det(P) = p^m at the available precision.
    """
    det = determinant(P)
    _check_valuation(det, m, f"det of the {m}-fold chain")
    exact = (det - ctx.p**m).is_zero
    if not exact:
        logger.warning(f"det of the {m}-fold chain is {det!r}, not {ctx.p}^{m}")
    return exact


class FrobeniusEvaluator(BaseEvaluator):
    """Evaluator running the Frobenius matrix chain, polynomial time in n"""

    method = "frobenius"

    def __init__(
        self,
        p: int,
        n: int,
        guard: int | None = None,
        eigen_method: EigenMethods | str = DEFAULT_EIGEN_METHOD,
    ):
        """Initialize the Frobenius evaluator.

        Args:
            p: The odd prime.
            n: Target precision exponent.
            guard: Guard digits for the precision policy.
            eigen_method: How the unit-root eigenvector is extracted ("newton" or "power").
        """
        super().__init__(p=p, n=n, guard=guard)
        if eigen_method not in [em.value for em in EigenMethods]:
            raise ValueError(
                f'Selected eigenvector method is not supported: "{eigen_method}"\n'
                f"Supported methods are: {[em.value for em in EigenMethods]}"
            )
        self.eigen_method = eigen_method
        self._entry_cache: OrderedDict[tuple, FrobeniusEntrySet] = OrderedDict()

    def entry_set(self, a: RationalParam, b: RationalParam, twist: TwistConfig, k: int = 0) -> FrobeniusEntrySet:
        """Entry series for the pair (a, b) at orbit index k, cached per twist (least recently used evicted)."""
        key = (a, b, k, twist.c.lift(), twist.c.prec)
        if key in self._entry_cache:
            self._entry_cache.move_to_end(key)
            return self._entry_cache[key]
        entries = abcd_series(a, b, twist, self.ctx.degree_bound, self.ctx, k=k)
        self._entry_cache[key] = entries
        if len(self._entry_cache) > ENTRY_CACHE_SIZE:
            self._entry_cache.popitem(last=False)
        return entries

    def chain_matrices(self, a: RationalParam, b: RationalParam, beta: PadicNum) -> list[FrobMatrix]:
        """The matrices H^(0)(beta), ..., H^(m-1)(beta) under the lift t -> beta^(1-p) t^p."""
        p = self.p
        twist = TwistConfig(c=(beta ** (p - 1)).inverse(), provenance="beta")
        orbit = dwork_orbit(a, b, p)
        logger.info(
            f"STEP 1. Building entry series for {len(orbit)} orbit pair(s) up to degree {self.ctx.degree_bound}"
        )
        entry_sets = [self.entry_set(ak, bk, twist, k) for k, (ak, bk) in enumerate(orbit)]
        logger.info("STEP 2. Evaluating the Frobenius matrices at beta")
        return [h_matrix(entries, beta, self.ctx) for entries in entry_sets]

    def df_value(self, a: ParamLike, b: ParamLike, beta: PointLike, k: int = 0) -> PadicNum:
        a, b = self.params(a, b)
        beta = self.point(beta)
        require_condition(a, b, beta, self.p)

        matrices = self.chain_matrices(a, b, beta)
        m = len(matrices)
        P = chain_product([matrices[(k + i) % m].as_array() for i in range(m)])
        chain_determinant_check(P, m, self.ctx)
        logger.info(f"STEP 3. Extracting the unit-root eigenvector ({self.eigen_method})")
        _, (v1, _) = unit_eigen(P, self.n, self.eigen_method)
        return (v1 / (beta * (1 - beta))).with_precision(self.n)

    def dwork_value(self, a: ParamLike, b: ParamLike, alpha: PointLike, c: PointLike = 1) -> PadicNum:
        a, b = self.params(a, b)
        alpha, c = self.point(alpha), self.twist(c)
        require_condition(a, b, alpha, self.p)
        point = EvalPoint.at(alpha, c)
        beta = point.beta

        df_next = self.df_value(a, b, beta, k=1)
        logger.info("STEP 4. Solving the Frobenius relation at alpha")
        entries = self.entry_set(a, b, point.twist, k=0)
        pC = step1_eval(entries.C, EntryKind.PC, alpha, c, self.ctx)
        D = step1_eval(entries.D, EntryKind.D, alpha, c, self.ctx)
        E = e_value(a, b, alpha, c, self.ctx)
        value = (D - beta * (1 - beta) * pC * df_next) * (1 - alpha) / ((1 - beta) * E)
        return value.with_precision(self.n)
