import asyncio
import logging

from dworkhg.cli.schemas import BenchRow, CompareReport, DigammaReport, EvaluationReport, JobSpec
from dworkhg.evaluators.base_evaluator import BaseEvaluator
from dworkhg.evaluators.oracle.evaluator import OracleEvaluator, check_condition, oracle_psi
from dworkhg.evaluators.oracle.schemas import ConditionReport
from dworkhg.evaluators.schemas import Quantities
from dworkhg.evaluators.solver.evaluator import FrobeniusEvaluator
from dworkhg.exceptions import InternalConsistencyError, InvalidParameterError
from dworkhg.padic.context import ctx_new
from dworkhg.special.digamma import psi_tilde
from dworkhg.special.dwork import RationalParam
from dworkhg.utils import base_p_digits, parse_fraction

logger = logging.getLogger(__name__)


def _require(job: JobSpec, *fields: str) -> None:
    missing = [name for name in fields if getattr(job, name) is None]
    if missing:
        raise InvalidParameterError(f"Subcommand {job.subcommand} requires: {', '.join('--' + m for m in missing)}")


def _evaluator(job: JobSpec, method: str | None = None) -> BaseEvaluator:
    if (method or job.method) == "oracle":
        return OracleEvaluator(p=job.p, n=job.n, guard=job.guard)
    return FrobeniusEvaluator(p=job.p, n=job.n, guard=job.guard, eigen_method=job.eigen)


def _prepare(job: JobSpec, method: str | None = None) -> tuple[BaseEvaluator, RationalParam, RationalParam]:
    """Validate the job against every precondition before any computation."""
    _require(job, "a", "b", "alpha")
    evaluator = _evaluator(job, method)
    a, b = evaluator.params(job.a, job.b)
    evaluator.point(job.alpha)
    evaluator.twist(job.c)
    return evaluator, a, b


def _report(job: JobSpec, a: RationalParam, b: RationalParam, result) -> EvaluationReport:
    return EvaluationReport(
        p=job.p,
        n=job.n,
        a=str(a),
        b=str(b),
        alpha=job.alpha,
        c=job.c,
        value=result.residue,
        digits=base_p_digits(result.residue, job.p, job.n),
        runtime_ms=round(result.runtime_ms, 3),
        method=result.method,
    )


def cmd_eval(job: JobSpec) -> EvaluationReport:
    """Value of the Dwork hypergeometric function at alpha mod p^n."""
    evaluator, a, b = _prepare(job)
    logger.info(f"--> Evaluating F^Dw_({a}, {b})({job.alpha}) mod {job.p}^{job.n} with the {evaluator.method} method")
    result = evaluator.evaluate(a, b, job.alpha, job.c, quantity=Quantities.DWORK)
    return _report(job, a, b, result)


def cmd_df(job: JobSpec) -> EvaluationReport:
    """Value of F'/F at alpha for the orbit pair of index k, mod p^n."""
    evaluator, a, b = _prepare(job)
    logger.info(f"--> Evaluating F'/F for orbit index {job.k} of ({a}, {b}) at {job.alpha} mod {job.p}^{job.n}")
    result = evaluator.evaluate(a, b, job.alpha, quantity=Quantities.DF, k=job.k)
    return _report(job, a, b, result)


async def _compare(solver: BaseEvaluator, oracle: BaseEvaluator, job: JobSpec, a, b):
    return await asyncio.gather(
        solver.aevaluate(a, b, job.alpha, job.c),
        oracle.aevaluate(a, b, job.alpha, job.c),
    )


def cmd_oracle(job: JobSpec) -> EvaluationReport | CompareReport:
    """Brute-force value through Dwork's congruences, optionally compared with the solver."""
    oracle, a, b = _prepare(job, method="oracle")
    if not job.compare:
        return _report(job, a, b, oracle.evaluate(a, b, job.alpha, job.c))

    solver, _, _ = _prepare(job, method="frobenius")
    logger.info(f"--> Comparing solver and oracle mod {job.p}^{job.n}")
    solver_result, oracle_result = asyncio.run(_compare(solver, oracle, job, a, b))
    report = CompareReport(
        p=job.p,
        n=job.n,
        solver_value=solver_result.residue,
        oracle_value=oracle_result.residue,
        agree=solver_result.residue == oracle_result.residue,
    )
    if not report.agree:
        raise InternalConsistencyError(report.message())
    return report


def cmd_check(job: JobSpec) -> ConditionReport:
    """Non-vanishing condition of the truncated series along the Dwork orbit."""
    _require(job, "a", "b", "alpha")
    evaluator = _evaluator(job, "oracle")
    a, b = evaluator.params(job.a, job.b)
    evaluator.point(job.alpha)
    return check_condition(a, b, job.alpha, job.p)


def cmd_digamma(job: JobSpec) -> DigammaReport:
    """The p-adic digamma value psi~(i/N) mod p^n."""
    _require(job, "arg")
    ctx = ctx_new(job.p, job.n, job.guard)
    arg = parse_fraction(job.arg)
    if not 0 <= arg < 1:
        raise InvalidParameterError(f"Digamma argument must lie in [0, 1), got {job.arg}")
    if job.method == "oracle":
        value = oracle_psi(arg.numerator, arg.denominator, ctx.p, ctx.n)
    else:
        value = psi_tilde(arg.numerator, arg.denominator, ctx.p, ctx.n)
    residue = value.residue(ctx.n)
    return DigammaReport(
        p=ctx.p,
        n=ctx.n,
        arg=str(arg),
        value=residue,
        digits=base_p_digits(residue, ctx.p, ctx.n),
        method="oracle" if job.method == "oracle" else "frobenius",
    )


def cmd_bench(job: JobSpec) -> list[BenchRow]:
    """Time the solver over a list of precisions and report successive runtime ratios."""
    n_list = job.n_list or [job.n]
    rows: list[BenchRow] = []
    for n in n_list:
        report = cmd_eval(job.model_copy(update={"subcommand": "eval", "n": n, "method": "frobenius"}))
        ctx = ctx_new(job.p, n, job.guard)
        ratio = report.runtime_ms / rows[-1].wall_ms if rows and rows[-1].wall_ms > 0 else None
        rows.append(
            BenchRow(
                n=n,
                e_n=ctx.e_n,
                degree_bound=ctx.degree_bound,
                wall_ms=report.runtime_ms,
                ratio=ratio,
                value=report.value,
            )
        )
        logger.info(f"bench n={n}: {report.runtime_ms:.1f} ms")
    return rows
