import asyncio
import logging
import time
from abc import ABC, abstractmethod
from fractions import Fraction

from dworkhg.evaluators.schemas import EvaluationResult, Quantities
from dworkhg.exceptions import InvalidParameterError, InvalidPointError, InvalidTwistError
from dworkhg.padic.context import PrecisionContext, ctx_new
from dworkhg.padic.number import PadicNum
from dworkhg.special.dwork import RationalParam, validate_param

logger = logging.getLogger(__name__)

ParamLike = RationalParam | Fraction | str
PointLike = PadicNum | int


class BaseEvaluator(ABC):
    """Abstract base evaluator class"""

    method: str = "base"

    def __init__(self, p: int, n: int, guard: int | None = None):
        """Initialize the base evaluator class.

        Args:
            p: The odd prime.
            n: Target precision: values are returned mod p^n.
            guard: Guard digits for the precision policy.
        """
        self.ctx: PrecisionContext = ctx_new(p, n, guard)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def n(self) -> int:
        return self.ctx.n

    @abstractmethod
    def dwork_value(self, a: ParamLike, b: ParamLike, alpha: PointLike, c: PointLike = 1) -> PadicNum:
        """Value of the Dwork hypergeometric function F_ab(t)/F_a'b'(c t^p) at alpha.

        This method must be implemented in any subclass.

        Returns:
            The value mod p^n.
        """

    @abstractmethod
    def df_value(self, a: ParamLike, b: ParamLike, beta: PointLike, k: int = 0) -> PadicNum:
        """Value of F'/F at beta for the k-th pair of the Dwork orbit of (a, b).

        This method must be implemented in any subclass.

        Returns:
            The value mod p^n.
        """

    def params(self, a: ParamLike, b: ParamLike) -> tuple[RationalParam, RationalParam]:
        """Coerce and validate a top-level parameter pair."""
        a = a if isinstance(a, RationalParam) else RationalParam.of(a)
        b = b if isinstance(b, RationalParam) else RationalParam.of(b)
        for param in (a, b):
            validate_param(param, self.p)
            if param.den >= self.p:
                raise InvalidParameterError(f"p={self.p} must exceed the denominator of {param}")
        return a, b

    def point(self, alpha: PointLike) -> PadicNum:
        """Coerce an evaluation point and check its residue is neither 0 nor 1."""
        alpha = alpha if isinstance(alpha, PadicNum) else self.ctx.from_int(alpha)
        if alpha.is_zero or alpha.v != 0 or alpha.residue(1) == 1:
            raise InvalidPointError(f"Evaluation point {alpha!r} must be a unit with residue other than 0 and 1")
        return alpha

    def twist(self, c: PointLike) -> PadicNum:
        """Coerce a twist constant and check it is 1 mod p."""
        c = c if isinstance(c, PadicNum) else self.ctx.from_int(c)
        if not c.is_unit or c.residue(1) != 1:
            raise InvalidTwistError(f"Twist {c!r} is not congruent to 1 mod {self.p}")
        return c

    def evaluate(
        self,
        a: ParamLike,
        b: ParamLike,
        alpha: PointLike,
        c: PointLike = 1,
        quantity: Quantities | str = Quantities.DWORK,
        k: int = 0,
    ) -> EvaluationResult:
        """Run one evaluation synchronously and time it.

        Args:
            a: First hypergeometric parameter.
            b: Second hypergeometric parameter.
            alpha: The evaluation point.
            c: Twist constant, used for the Dwork function only.
            quantity: "dwork" for the Dwork function, "df" for F'/F.
            k: Orbit index, used for F'/F only.

        Returns:
            The value with its canonical residue and the wall-clock time.
        """
        start = time.perf_counter()
        if quantity == Quantities.DWORK:
            value = self.dwork_value(a, b, alpha, c)
        elif quantity == Quantities.DF:
            value = self.df_value(a, b, alpha, k)
        else:
            raise ValueError(f"Unsupported quantity: {quantity}")
        runtime_ms = (time.perf_counter() - start) * 1000
        logger.info(f"{self.method} evaluation mod {self.p}^{self.n} finished in {runtime_ms:.1f} ms")
        return EvaluationResult(
            value=value, residue=value.residue(self.n), runtime_ms=runtime_ms, method=self.method
        )

    async def aevaluate(self, *args, **kwargs) -> EvaluationResult:
        """Run one evaluation in a worker thread.

        Args:
            *args: Positional arguments of `evaluate`.
            **kwargs: Keyword arguments of `evaluate`.

        Returns:
            The result of `evaluate`.
        """
        return await asyncio.to_thread(self.evaluate, *args, **kwargs)
