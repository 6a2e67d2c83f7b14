from fractions import Fraction

import pytest

from dworkhg.exceptions import InvalidParameterError
from dworkhg.frobenius.bounds import EntryKind, e_bound, numerator_degree_bound, working_precision
from dworkhg.frobenius.entries import (
    abcd_series,
    e_value,
    exponent_defect,
    frobenius_determinant_series,
    hg_series,
    subst_binpow,
    tail_coefficients,
    tau_series,
    tau_sigma_series,
)
from dworkhg.frobenius.schemas import TwistConfig
from dworkhg.padic import PadicNum, ctx_new
from dworkhg.series import s_binpow, s_mul, s_scale
from dworkhg.special.digamma import tau_constant
from dworkhg.special.dwork import RationalParam, dwork_prime

HALF = RationalParam.of("1/2")
PAIRS = [("1/2", "1/2"), ("1/3", "2/3"), ("1/2", "1/3"), ("1/4", "3/4")]


def params(a: str, b: str) -> tuple[RationalParam, RationalParam]:
    return RationalParam.of(a), RationalParam.of(b)


def twist(ctx, c: int = 1) -> TwistConfig:
    return TwistConfig(c=ctx.from_int(c))


@pytest.mark.parametrize("n, e_n", [(1, 0), (2, 1), (3, 2), (5, 5), (20, 25)])
def test_e_bound(n, e_n):
    assert e_bound(5, n) == (e_n, 5 * e_n + 10)


def test_e_bound_asymptotic():
    e_n, _ = e_bound(5, 1000)
    assert abs(e_n / 1000 - Fraction(4, 3)) <= 0.05


def test_numerator_degree_bounds():
    assert [numerator_degree_bound(kind, 5, 3) for kind in EntryKind] == [20, 25, 19, 24]
    assert [kind.carries_p for kind in EntryKind] == [True, False, True, False]


def test_working_precision_matches_context():
    ctx = ctx_new(7, 6, 3)
    assert working_precision(7, 6, 3) == ctx.nu


@pytest.mark.parametrize("guard, nu", [(0, 32), (4, 32), (12, 32), (20, 40)])
def test_working_precision_keeps_fixed_slack_and_guard_floor(guard, nu):
    # D* = 135 at p=5, n=20, so 2*ceil(log_5(136)) = 8
    assert ctx_new(5, 20, guard).nu == nu
    assert working_precision(5, 20, guard) == nu


def test_hg_series_mod_p():
    ctx = ctx_new(5, 3, 0)
    F, F_prime = hg_series(HALF, HALF, 4, ctx)
    assert F.residues(1) == [1, 4, 1, 0, 0]
    assert F[1].residue(3) == 94
    assert F_prime.order == 4
    assert F_prime[0].residue(3) == 94


def test_hg_series_rejects_p_in_denominator():
    with pytest.raises(InvalidParameterError):
        hg_series(RationalParam.of("1/5"), HALF, 4, ctx_new(5, 3, 0))


@pytest.mark.parametrize("a, b", PAIRS)
def test_tau_series_first_coefficient(a, b):
    ctx = ctx_new(7, 4, 0)
    a, b = params(a, b)
    tau = tau_series(a, b, 6, ctx)
    assert tau[0].is_zero
    expected = ctx.from_fraction(2 * a.value * b.value - a.value - b.value)
    assert (tau[1] - expected).residue(ctx.n) == 0


def test_tau_sigma_series_constant_term():
    ctx = ctx_new(5, 2)
    tau = tau_sigma_series(HALF, HALF, twist(ctx), ctx.degree_bound, ctx)
    assert tau[0].residue(1) == 2
    assert all(c.is_zero or c.v >= 0 for c in tau.coeffs)


def test_tau_sigma_series_linear_term_untouched_by_frobenius_part():
    ctx = ctx_new(5, 2)
    tau = tau_sigma_series(HALF, HALF, twist(ctx), ctx.degree_bound, ctx)
    plain = tau_series(HALF, HALF, ctx.degree_bound, ctx)
    assert (tau[1] - plain[1]).residue(ctx.n) == 0


@pytest.mark.parametrize("a, b, m", [("1/2", "1/2", -4), ("1/3", "2/3", -4), ("1/3", "1/3", -6)])
def test_exponent_defect(a, b, m):
    assert exponent_defect(*params(a, b), 5) == m


@pytest.mark.parametrize("a, b", PAIRS[:3])
@pytest.mark.parametrize("c", [1, 6])
def test_entries_at_zero(a, b, c):
    ctx = ctx_new(5, 2)
    a, b = params(a, b)
    entries = abcd_series(a, b, twist(ctx, c), ctx.degree_bound, ctx)
    assert entries.A[0].residue(ctx.n) == 1
    assert entries.B[0].residue(ctx.n) == 0
    assert entries.D[0].residue(ctx.n) == 1
    assert entries.E[0].residue(ctx.n) == 1
    kappa = tau_constant(a, b, ctx.from_int(c), ctx.nu)
    assert (entries.C[0] - kappa).residue(ctx.n) == 0


@pytest.mark.parametrize("a, b", PAIRS[:3])
def test_entries_are_integral(a, b):
    ctx = ctx_new(5, 3)
    entries = abcd_series(*params(a, b), twist(ctx), ctx.degree_bound, ctx)
    for series in (entries.A, entries.B, entries.C, entries.D, entries.tau_sigma):
        assert all(c.is_zero or c.v >= 0 for c in series.coeffs)
        assert len(series.coeffs) == ctx.degree_bound + 1


@pytest.mark.parametrize("c", [1, 11])
def test_frobenius_determinant_series(c):
    ctx = ctx_new(5, 2)
    d = ctx.degree_bound
    a, b = params("1/2", "1/3")
    entries = abcd_series(a, b, twist(ctx, c), d, ctx)
    a1_b1 = dwork_prime(a, 5).value + dwork_prime(b, 5).value
    expected = s_scale(
        s_mul(s_binpow(a.value + b.value - 1, d, ctx), subst_binpow(1 - a1_b1, ctx.from_int(c), d, ctx), d),
        ctx.p,
    )
    assert frobenius_determinant_series(entries).residues(ctx.n) == expected.residues(ctx.n)


@pytest.mark.parametrize("n", [2, pytest.param(3, marks=pytest.mark.slow), pytest.param(4, marks=pytest.mark.slow)])
def test_tail_vanishing(n):
    ctx = ctx_new(5, n)
    entries = abcd_series(HALF, HALF, twist(ctx), 2 * ctx.degree_bound, ctx)
    for kind in EntryKind:
        tail = tail_coefficients(entries.entry(kind), kind, entries.twist.c, ctx)
        assert tail, kind
        assert all(c.residue(ctx.n) == 0 for c in tail), kind


@pytest.mark.parametrize("a, b", [("1/2", "1/2"), ("1/3", "2/3")])
@pytest.mark.parametrize("alpha, c", [(2, 1), (3, 1), (4, 6)])
def test_e_value_closed_form(a, b, alpha, c):
    # a + b = a' + b' = 1, so E(alpha) = (1 - alpha)/(1 - c alpha^p)
    ctx = ctx_new(5, 6)
    value = e_value(*params(a, b), ctx.from_int(alpha), ctx.from_int(c), ctx)
    expected = PadicNum.from_fraction(5, Fraction(1 - alpha, 1 - c * alpha**5), ctx.nu)
    assert value.residue(ctx.n) == expected.residue(ctx.n)
