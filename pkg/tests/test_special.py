from fractions import Fraction

import pytest

from dworkhg.evaluators.oracle.evaluator import oracle_psi
from dworkhg.exceptions import InvalidParameterError, InvalidPointError, InvalidTwistError, NonUnitError
from dworkhg.padic import PadicNum
from dworkhg.special.digamma import psi_tilde, tau_constant
from dworkhg.special.dwork import RationalParam, dwork_orbit, dwork_prime, orbit_length, validate_param
from dworkhg.special.unramified import iwasawa_log, ln1p, padic_log, teichmuller, zq_init


def param(text: str) -> RationalParam:
    return RationalParam.of(text)


@pytest.mark.parametrize("a, expected", [("1/2", "1/2"), ("1/3", "2/3"), ("2/3", "1/3"), ("1/4", "1/4")])
def test_dwork_prime(a, expected):
    assert dwork_prime(param(a), 5) == param(expected)


def test_dwork_prime_rejects_p_in_denominator():
    with pytest.raises(InvalidParameterError):
        dwork_prime(param("1/5"), 5)


@pytest.mark.parametrize(
    "a, b, expected",
    [("1/2", "1/2", 1), ("1/3", "1/3", 2), ("1/2", "1/3", 2), ("1/3", "2/3", 2)],
)
def test_orbit_length(a, b, expected):
    assert orbit_length(param(a), param(b), 5) == expected


def test_orbit_cycles_back():
    orbit = dwork_orbit(param("1/3"), param("1/2"), 5)
    a, b = orbit[-1]
    assert (dwork_prime(a, 5), dwork_prime(b, 5)) == orbit[0]


@pytest.mark.parametrize("text", ["0/1", "1/1", "3/2", "1/10"])
def test_validate_param_rejects(text):
    with pytest.raises(InvalidParameterError):
        validate_param(param(text), 5)


@pytest.mark.parametrize("text", ["2/4", "1/-2", "x/3", "1/0"])
def test_param_parsing_rejects(text):
    with pytest.raises(InvalidParameterError):
        RationalParam.of(text)


def test_param_round_trips_to_string():
    assert str(param("3/4")) == "3/4"
    assert param("3/4").value == Fraction(3, 4)


@pytest.mark.parametrize("L, f", [(2, 1), (4, 1), (3, 2), (1, 1)])
def test_zq_init_degree(L, f):
    assert zq_init(L, 5, 3).f == f


def test_zq_init_square_roots_of_unity():
    assert zq_init(2, 5, 3).H == (1, 1)


def test_zq_init_rejects_p_dividing_order():
    with pytest.raises(InvalidParameterError):
        zq_init(10, 5, 3)


def test_zq_init_is_reproducible():
    assert zq_init(3, 5, 4) == zq_init(3, 5, 4)


def test_zq_init_is_cached():
    assert zq_init(3, 5, 4) is zq_init(3, 5, 4)


def test_zq_inverse():
    ctx = zq_init(3, 5, 6)
    x = ctx.element([2, 3])
    assert x * x.inverse() == 1
    with pytest.raises(NonUnitError):
        ctx.element([5, 10]).inverse()


def test_teichmuller():
    ctx = zq_init(4, 5, 2)
    assert teichmuller(ctx.constant(2)).constant_term() == 7
    assert teichmuller(ctx.constant(1)) == 1
    lifted = teichmuller(ctx.constant(2))
    assert teichmuller(lifted) == lifted


def test_teichmuller_is_a_root_of_unity():
    ctx = zq_init(3, 5, 5)
    omega = teichmuller(ctx.generator())
    assert omega**3 == 1


def test_teichmuller_rejects_non_unit():
    ctx = zq_init(4, 5, 2)
    with pytest.raises(NonUnitError):
        teichmuller(ctx.constant(5))


def test_iwasawa_log():
    ctx = zq_init(1, 5, 2)
    assert iwasawa_log(ctx.constant(1)) == 0
    assert iwasawa_log(ctx.constant(6)).constant_term() == 5
    assert iwasawa_log(teichmuller(ctx.constant(2))) == 0


def test_iwasawa_log_is_a_homomorphism():
    ctx = zq_init(1, 7, 6)
    x, y = ctx.constant(3), ctx.constant(10)
    assert iwasawa_log(x * y) == iwasawa_log(x) + iwasawa_log(y)


def test_iwasawa_log_rejects_non_unit():
    with pytest.raises(InvalidPointError):
        iwasawa_log(zq_init(1, 5, 2).constant(10))


def test_padic_log():
    assert padic_log(PadicNum.from_int(5, 6, 2)).residue(2) == 5
    assert padic_log(PadicNum.from_int(5, 2, 4)).residue(2) == 10


def test_padic_log_reuses_the_prime_field_context():
    zq_init.cache_clear()
    padic_log(PadicNum.from_int(5, 6, 3))
    padic_log(PadicNum.from_int(5, 11, 3))
    info = zq_init.cache_info()
    assert (info.misses, info.hits) == (1, 1)


def test_ln1p_at_minus_one():
    ctx = zq_init(2, 5, 3)
    assert ln1p(ctx.constant(-1)).constant_term() % 5 == 2


def test_ln1p_matches_iwasawa_log_of_the_ratio():
    ctx = zq_init(3, 5, 6)
    one = ctx.constant(1)
    z = teichmuller(ctx.generator())
    ratio = (one - z) ** 5 * (one - z**5).inverse()
    expected = -iwasawa_log(ratio).divide_by_p()
    modulus = 5 ** (ctx.nu - 1)
    assert [c % modulus for c in (ln1p(z) - expected).coordinates()] == [0, 0]


def test_ln1p_rejects_one_and_non_roots():
    ctx = zq_init(2, 5, 3)
    with pytest.raises(InvalidParameterError):
        ln1p(ctx.constant(1))
    with pytest.raises(InvalidParameterError):
        ln1p(ctx.constant(2))


def test_psi_tilde_small_values():
    assert psi_tilde(0, 3, 5, 3).is_zero
    assert psi_tilde(1, 2, 5, 1).residue(1) == 4


def test_psi_tilde_half_is_twice_ln1p():
    ctx = zq_init(2, 5, 4)
    twice = 2 * ln1p(ctx.constant(-1)).constant_term() % 5**3
    assert psi_tilde(1, 2, 5, 3).residue(3) == twice


def test_psi_tilde_rejects_p_dividing_denominator():
    with pytest.raises(InvalidParameterError):
        psi_tilde(1, 5, 5, 3)


@pytest.mark.parametrize("p", [5, 7])
@pytest.mark.parametrize("i, N", [(1, 2), (1, 3), (2, 3), (1, 4), (3, 4)])
def test_psi_tilde_matches_limit_definition(p, i, N):
    assert psi_tilde(i, N, p, 4).residue(4) == oracle_psi(i, N, p, 4).residue(4)


def test_tau_constant():
    c = PadicNum.from_int(5, 1, 3)
    assert tau_constant(param("1/2"), param("1/2"), c, 3).residue(1) == 2


def test_tau_constant_log_term():
    c = PadicNum.from_int(5, 6, 4)
    plain = tau_constant(param("1/2"), param("1/2"), PadicNum.from_int(5, 1, 4), 4)
    twisted = tau_constant(param("1/2"), param("1/2"), c, 4)
    assert (twisted - plain).residue(1) == padic_log(c).residue(2) // 5 % 5


def test_tau_constant_rejects_bad_twist():
    with pytest.raises(InvalidTwistError):
        tau_constant(param("1/2"), param("1/2"), PadicNum.from_int(5, 2, 3), 3)
