import random
from fractions import Fraction

import pytest

from dworkhg.exceptions import InvalidParameterError, InvalidPointError, InvalidTwistError, NonUnitError
from dworkhg.padic import PadicNum, ctx_new
from dworkhg.series import (
    SeriesTrunc,
    s_binpow,
    s_derivative,
    s_eval,
    s_integrate,
    s_inv,
    s_mul,
    s_subst_frob,
)


@pytest.fixture
def ctx():
    return ctx_new(5, 2, 0)


def series(ctx, values):
    return SeriesTrunc.from_values(ctx, values)


def test_mul_difference_of_squares(ctx):
    product = s_mul(series(ctx, [1, 1, 0]), series(ctx, [1, -1, 0]), 2)
    assert product.residues(2) == [1, 0, 24]


def test_mul_by_one_is_identity(ctx):
    f = series(ctx, [3, 7, 11, 2])
    assert s_mul(f, SeriesTrunc.one(ctx, 3), 3).residues(2) == f.residues(2)


def test_mul_squares_binomial_series(ctx):
    square = s_mul(series(ctx, [1, 12, 3]), series(ctx, [1, 12, 3]), 2)
    assert square.residues(2) == [1, 24, 0]


def test_inv_geometric_series(ctx):
    assert s_inv(series(ctx, [1, -1, 0, 0]), 3).residues(2) == [1, 1, 1, 1]


def test_inv_reduces_modulo_precision(ctx):
    assert s_inv(series(ctx, [1, 5, 0]), 2).residues(2) == [1, 20, 0]


def test_inv_rejects_zero_constant_term(ctx):
    with pytest.raises(NonUnitError):
        s_inv(series(ctx, [0, 1, 1]), 2)


def test_inv_times_series_is_one():
    ctx = ctx_new(7, 5, 0)
    rng = random.Random(7)
    d = 12
    values = [rng.randrange(1, 7)] + [rng.randrange(0, 7**ctx.nu) for _ in range(d)]
    f = series(ctx, values)
    product = s_mul(f, s_inv(f, d), d)
    assert product.residues(ctx.n) == [1] + [0] * d


@pytest.mark.parametrize(
    "r, expected",
    [
        (1, [1, 24, 0]),
        (Fraction(1, 2), [1, 12, 3]),
        (0, [1, 0, 0]),
    ],
)
def test_binpow(ctx, r, expected):
    assert s_binpow(r, 2, ctx).residues(2) == expected


def test_binpow_square_recovers_polynomial():
    ctx = ctx_new(7, 4, 0)
    half = s_binpow(Fraction(1, 2), 10, ctx)
    assert s_mul(half, half, 10).residues(4) == [1, 7**4 - 1] + [0] * 9


def test_binpow_rejects_p_in_denominator(ctx):
    with pytest.raises(InvalidParameterError):
        s_binpow(Fraction(1, 5), 3, ctx)


def test_subst_frob_is_sparse(ctx):
    result = s_subst_frob(series(ctx, [1, 1]), ctx.one(), 9)
    assert result.residues(2) == [1, 0, 0, 0, 0, 1, 0, 0, 0, 0]


def test_subst_frob_scales_by_twist_powers():
    ctx = ctx_new(5, 3, 0)
    c = ctx.from_int(6)
    result = s_subst_frob(series(ctx, [0, 0, 1]), c, 10)
    assert result.order == 10
    assert result[10].residue(3) == 36
    assert all(coefficient.is_zero for coefficient in result.coeffs[:10])


def test_subst_frob_fixes_constants(ctx):
    c = ctx.from_int(11)
    assert s_subst_frob(series(ctx, [4]), c, 0).residues(2) == [4]


def test_subst_frob_rejects_bad_twist(ctx):
    with pytest.raises(InvalidTwistError):
        s_subst_frob(series(ctx, [1, 1]), ctx.from_int(2), 9)


def test_integrate(ctx):
    assert s_integrate(series(ctx, [1])).residues(2) == [0, 1]
    assert s_integrate(series(ctx, [0, 2])).residues(2) == [0, 0, 1]


def test_integrate_drops_valuation(ctx):
    result = s_integrate(series(ctx, [0, 0, 0, 0, 1]))
    assert result[5].v == -1
    assert result[5].u % 5 == 1


def test_derivative_then_integrate(ctx):
    f = series(ctx, [0, 3, 1, 4])
    assert s_integrate(s_derivative(f)).residues(2) == f.residues(2)


def test_eval(ctx):
    assert s_eval(series(ctx, [1, 4, 1]), ctx.from_int(2)).residue(1) == 3
    assert s_eval(series(ctx, [9, 3, 2]), 0).residue(2) == 9
    assert s_eval(series(ctx, [0, 1]), ctx.from_int(7)).residue(2) == 7


def test_eval_rejects_non_integral_point(ctx):
    point = PadicNum.from_fraction(5, Fraction(1, 5), ctx.nu)
    with pytest.raises(InvalidPointError):
        s_eval(series(ctx, [1, 1]), point)


def test_subst_frob_is_multiplicative():
    ctx = ctx_new(7, 4, 0)
    rng = random.Random(11)
    d = 6
    f = series(ctx, [rng.randrange(0, 7**ctx.n) for _ in range(d + 1)])
    g = series(ctx, [rng.randrange(0, 7**ctx.n) for _ in range(d + 1)])
    c = ctx.from_int(8)
    D = 7 * (d + 1) - 1
    lhs = s_subst_frob(s_mul(f, g, d), c, D)
    rhs = s_mul(s_subst_frob(f, c, D), s_subst_frob(g, c, D), D)
    assert lhs.residues(ctx.n) == rhs.residues(ctx.n)


@pytest.mark.parametrize(
    "r1, r2",
    [(Fraction(1, 3), Fraction(1, 2)), (Fraction(-1, 2), Fraction(3, 4)), (2, Fraction(-5, 3))],
)
def test_binpow_adds_exponents(r1, r2):
    ctx = ctx_new(7, 4, 0)
    d = 10
    product = s_mul(s_binpow(r1, d, ctx), s_binpow(r2, d, ctx), d)
    assert product.residues(ctx.n) == s_binpow(Fraction(r1) + Fraction(r2), d, ctx).residues(ctx.n)
