import random
from fractions import Fraction

import pytest

from oracles import bernoulli_oracle, residue
from padic_iwasawa.errors import BadRegularizer, PoleAtOne
from padic_iwasawa.measures import (
    UnitMeasure,
    convolve,
    dirac,
    level_data,
    plus_part,
    pushforward_times_p,
)
from padic_iwasawa.padic import ApproxScalar, PadicContext, PadicScalar, iwasawa_log, log_q
from padic_iwasawa.series import big_d_inverse, series_moment
from padic_iwasawa.zeta import (
    bernoulli_series,
    e1c,
    f_measure,
    lp_at_integer,
    lp_general,
    make_zeta,
    regularizer_gap,
    zeta_times,
)

P, N, n = 5, 6, 3
CTX = PadicContext(P, N, n)
MOD = P**N
LEVEL_TOL = min(N, n) - 1
DIVISION_TOL = n - 2
B = bernoulli_oracle(30)


def exact(x):
    return ApproxScalar.exact(P, x, 4 * N)


def random_mass_zero(seed):
    rng = random.Random(seed)
    d = level_data(P, n)
    coeffs = [rng.randrange(MOD) for _ in d.units]
    coeffs[0] = (coeffs[0] - sum(coeffs)) % MOD
    return UnitMeasure(P, N, n, coeffs, N)


@pytest.mark.parametrize("c", [2, 3, 7])
def test_bernoulli_series_moments_match_zeta_values(c):
    # int x^k dE_{1,c} = (1 - c^(k+1)) B_(k+1) / (k+1) with B_1 = -1/2
    f = bernoulli_series(P, N, c, 40)
    for k in range(0, 12):
        want = (1 - Fraction(c) ** (k + 1)) * B[k + 1] / (k + 1)
        assert series_moment(f, k).value == residue(want, P, N)


def test_bernoulli_series_constant_term():
    assert e1c(CTX, 2).series.at_zero().value == residue(Fraction(1, 2), P, N)


@pytest.mark.parametrize("c", [2, 3])
def test_e1c_satisfies_distribution_relation(c):
    E = e1c(CTX, c)
    four_term = E.measure - pushforward_times_p(E.measure)
    assert not any(four_term.coeffs[i] for i in range(0, P**n, P))


@pytest.mark.parametrize("c", [5, 10])
def test_e1c_rejects_non_units(c):
    with pytest.raises(BadRegularizer):
        e1c(CTX, c)


@pytest.mark.parametrize("c", [2, 3])
def test_f_measure_is_odd(c):
    assert not any(plus_part(f_measure(CTX, c)).coeffs)


@pytest.mark.parametrize("c", [2, 3])
def test_f_measure_mass_is_log(c):
    expected = ApproxScalar.from_scalar(iwasawa_log(PadicScalar(P, N, pow(c, -1, MOD), N))) * (1 - exact(Fraction(1, P)))
    assert f_measure(CTX, c).mass().agreement(expected) >= LEVEL_TOL
    g = big_d_inverse(e1c(CTX, c).restricted_series(P * (N + 2)))
    assert g.at_zero().agreement(expected) >= LEVEL_TOL


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_lp_vanishes_at_even_m(m):
    assert lp_at_integer(CTX, m, 2).value == 0


def test_lp_pole_at_one():
    with pytest.raises(PoleAtOne):
        lp_at_integer(CTX, 1, 2)


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_lp_independent_of_regularizer(m):
    assert lp_at_integer(CTX, m, 2).agreement(lp_at_integer(CTX, m, 3)) >= LEVEL_TOL


@pytest.mark.parametrize("m", [3, 5, 7])
def test_lp_at_integer_matches_general_route(m):
    a = lp_at_integer(CTX, m, 2)
    b = lp_general(CTX, 1 - m, (1 - m) % (P - 1), 2)
    assert a.agreement(b) >= LEVEL_TOL


@pytest.mark.parametrize("k", [2, 4, 6, 8, 10])
@pytest.mark.parametrize("c", [2, 3])
def test_lp_interpolates_bernoulli_numbers(k, c):
    value = lp_general(CTX, k, k, c)
    want = -(1 - Fraction(P) ** (k - 1)) * B[k] / k
    assert value.agreement(exact(want)) >= N - 2


# k must avoid 0 mod p-1, where the trivial character gives a pole
@pytest.mark.parametrize("k1,k2", [(2, 6), (6, 10), (2, 22)])
def test_kummer_congruences(k1, k2):
    d = k2 - k1
    v = 0
    while d % P == 0:
        d //= P
        v += 1
    a = lp_general(CTX, k1, k1, 2)
    b = lp_general(CTX, k2, k2, 2)
    assert a.agreement(b) >= 1 + v


def test_make_zeta_rejects_non_generator():
    # 4 has order 2 mod 5
    with pytest.raises(BadRegularizer):
        make_zeta(CTX, 4)


def test_regularizer_cross_identity():
    assert regularizer_gap(CTX, 2, 3) >= LEVEL_TOL


def test_zeta_times_delta_difference_is_minus_f():
    z = make_zeta(CTX, 2, 3)
    cinv = pow(2, -1, P**n)
    mu = dirac(1, P, N, n) - dirac(cinv, P, N, n)
    # A-moment of the genuine delta_1 - delta_{1/2}: log 2 / log q
    lq = ApproxScalar.from_scalar(log_q(P, N + 2))
    a = ApproxScalar.from_scalar(iwasawa_log(PadicScalar(P, N + 2, 2, N + 2))) / lq
    assert zeta_times(z, mu, a).agreement(-z.F) >= DIVISION_TOL


@pytest.mark.parametrize("seed", range(4))
def test_zeta_times_is_linear(seed):
    z = make_zeta(CTX, 2, 3)
    m1, m2 = random_mass_zero(seed), random_mass_zero(seed + 100)
    lhs = zeta_times(z, m1 + m2)
    rhs = zeta_times(z, m1) + zeta_times(z, m2)
    assert lhs.agreement(rhs) >= DIVISION_TOL


@pytest.mark.parametrize("seed", range(4))
def test_zeta_times_lands_in_minus_part(seed):
    z = make_zeta(CTX, 2, 3)
    out = plus_part(zeta_times(z, random_mass_zero(seed)))
    assert all(x % P**DIVISION_TOL == 0 for x in out.coeffs)


def test_zeta_times_matches_convolution_identity():
    # (delta_1 - delta_{1/c}) zeta mu = -F_c mu
    z = make_zeta(CTX, 2, 3)
    mu = random_mass_zero(7)
    one = dirac(1, P, N, n)
    lhs = convolve(one - dirac(pow(2, -1, P**n), P, N, n), zeta_times(z, mu))
    assert lhs.agreement(-convolve(z.F, mu)) >= DIVISION_TOL
