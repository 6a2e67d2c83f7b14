"""End-to-end agreement between the Frobenius solver, the congruence oracle and the closed forms."""
import time

import pytest

from dworkhg.evaluators.oracle.evaluator import check_condition, oracle_df, oracle_dwork
from dworkhg.evaluators.solver.eigen import chain_product, determinant, unit_eigen
from dworkhg.evaluators.solver.evaluator import FrobeniusEvaluator
from dworkhg.frobenius.entries import abcd_series
from dworkhg.frobenius.schemas import TwistConfig
from dworkhg.padic import ctx_new
from dworkhg.special.dwork import RationalParam, dwork_orbit

PAIRS = [("1/2", "1/2"), ("1/3", "2/3"), ("1/2", "1/3"), ("1/4", "3/4")]


def sweep_cases(p: int) -> list[tuple[RationalParam, RationalParam, int]]:
    cases = []
    for a, b in PAIRS:
        a, b = RationalParam.of(a), RationalParam.of(b)
        if p <= max(a.den, b.den):
            continue
        cases.extend((a, b, alpha) for alpha in range(2, p) if check_condition(a, b, alpha, p).ok)
    return cases


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_solver_matches_oracle(p, n):
    solver = FrobeniusEvaluator(p=p, n=n)
    for a, b, alpha in sweep_cases(p):
        expected = oracle_dwork(a, b, alpha, 1, n, p).residue(n)
        assert solver.dwork_value(a, b, alpha).residue(n) == expected, (a, b, alpha)
        for k, (ak, bk) in enumerate(dwork_orbit(a, b, p)):
            expected = oracle_df(ak, bk, alpha, n, p).residue(n)
            assert solver.df_value(a, b, alpha, k=k).residue(n) == expected, (a, b, alpha, k)


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7])
def test_integrality_across_sweep(p):
    for n in (2, 4):
        ctx = ctx_new(p, n)
        for a, b in PAIRS:
            a, b = RationalParam.of(a), RationalParam.of(b)
            if p <= max(a.den, b.den):
                continue
            for k, (ak, bk) in enumerate(dwork_orbit(a, b, p)):
                # abcd_series asserts integrality and raises on a violation
                entries = abcd_series(ak, bk, TwistConfig(c=ctx.one()), ctx.degree_bound, ctx, k=k)
                assert entries.k == k


@pytest.mark.slow
@pytest.mark.parametrize("p", [5, 7])
def test_determinants_and_eigen_residuals(p):
    n = 3
    solver = FrobeniusEvaluator(p=p, n=n)
    for a, b, alpha in sweep_cases(p):
        beta = solver.point(alpha)
        matrices = solver.chain_matrices(a, b, beta)
        for frob in matrices:
            assert frob.determinant().v == 1
        P = chain_product([frob.as_array() for frob in matrices])
        assert determinant(P).v == len(matrices)
        lam, (v1, v2) = unit_eigen(P, n)
        assert lam.is_unit
        assert (P[0, 0] * v1 + P[0, 1] * v2 - lam * v1).residue(n) == 0
        assert (P[1, 0] * v1 + P[1, 1] * v2 - lam * v2).residue(n) == 0


@pytest.mark.slow
def test_runtime_grows_polynomially():
    half = RationalParam.of("1/2")
    timings = {}
    for n in (25, 50, 100):
        solver = FrobeniusEvaluator(p=5, n=n)
        start = time.perf_counter()
        solver.dwork_value(half, half, 2)
        timings[n] = time.perf_counter() - start
    assert timings[50] / timings[25] <= 25
    assert timings[100] / timings[50] <= 25
