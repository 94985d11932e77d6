from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import exp_oracle, iwasawa_log_oracle, residue, teichmuller_hensel
from padic_iwasawa.errors import NonUnit, OutOfDomain
from padic_iwasawa.padic import (
    ApproxScalar,
    PadicContext,
    PadicScalar,
    angle,
    iwasawa_log,
    log_q,
    pexp,
    ppow,
    teichmuller,
    vp,
)

P, N = 5, 6
MOD = P**N

# frozen from the Hensel and rational-series oracles in oracles.py
TEICH_2_P5_N6 = 14557
LOG_6_P5_N6 = 1805
EXP_5_P5_N6 = 6081


def S(x, p=P, n=N):
    return PadicScalar.of(p, n, x)


units = st.integers(min_value=1, max_value=MOD - 1).filter(lambda x: x % P)


def test_context_rejects_bad_parameters():
    with pytest.raises(ValueError):
        PadicContext(4, 6, 2)
    with pytest.raises(ValueError):
        PadicContext(2, 6, 2)
    with pytest.raises(ValueError):
        PadicContext(5, 6, 2, M=10)
    assert PadicContext(5, 6, 2).M == 25 * 6


def test_scalar_precision_propagation():
    a = PadicScalar(P, N, 5, 3)
    b = PadicScalar(P, N, 2, 6)
    assert (a + b).eff == 3
    # eff = min(e1 + v2, e2 + v1)
    assert (a * b).eff == min(3 + 0, 6 + 1)
    assert (a * a).eff == 4
    with pytest.raises(NonUnit):
        a.inverse()


def test_teichmuller_examples():
    assert teichmuller(S(1)).value == 1
    assert teichmuller(S(P - 1)).value == MOD - 1
    assert teichmuller(S(2)).value == TEICH_2_P5_N6
    assert teichmuller_hensel(2, P, N) == TEICH_2_P5_N6
    assert pow(TEICH_2_P5_N6, 4, MOD) == 1


def test_angle_examples():
    assert angle(S(1)).value == 1
    assert angle(S(TEICH_2_P5_N6)).value == 1
    assert angle(S(2)).value == 2 * pow(TEICH_2_P5_N6, -1, MOD) % MOD


def test_log_examples():
    assert iwasawa_log(S(1)).value == 0
    assert iwasawa_log(S(TEICH_2_P5_N6)).value == 0
    assert iwasawa_log(S(6)).value == LOG_6_P5_N6
    assert iwasawa_log(S(6)).value % 25 == 5
    assert iwasawa_log_oracle(6, P, N) == LOG_6_P5_N6


def test_exp_examples():
    assert pexp(S(0)).value == 1
    assert pexp(S(5)).value == EXP_5_P5_N6
    assert EXP_5_P5_N6 % 25 == 6
    assert exp_oracle(Fraction(5), P, N) == EXP_5_P5_N6
    back = pexp(iwasawa_log(S(1 + P)))
    assert back.agreement(S(1 + P)) >= back.eff
    with pytest.raises(OutOfDomain):
        pexp(S(1))


def test_ppow_examples():
    assert ppow(S(2), S(0)).value == 1
    assert ppow(S(2), S(1)).agreement(angle(S(2))) == N
    assert ppow(S(2), S(3)).agreement(angle(S(2)) ** 3) == N


def test_log_q_is_log_of_p_plus_one():
    assert log_q(P, N).value == iwasawa_log(S(P + 1)).value


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_log_matches_oracle_on_small_units(p):
    for x in range(2, 30):
        if x % p:
            assert iwasawa_log(S(x, p, 8)).value == iwasawa_log_oracle(x, p, 8)


@given(units, units)
def test_teichmuller_and_angle_are_multiplicative(x, y):
    assert teichmuller(S(x * y)).agreement(teichmuller(S(x)) * teichmuller(S(y))) == N
    assert angle(S(x * y)).agreement(angle(S(x)) * angle(S(y))) == N


@given(units)
def test_teichmuller_idempotent_and_hensel(x):
    w = teichmuller(S(x))
    assert teichmuller(w).value == w.value
    assert w.value == teichmuller_hensel(x, P, N)


@given(units, units)
def test_log_is_additive(x, y):
    lhs = iwasawa_log(S(x * y))
    rhs = iwasawa_log(S(x)) + iwasawa_log(S(y))
    assert lhs.agreement(rhs) >= min(lhs.eff, rhs.eff)


@given(units, st.integers(0, 200), st.integers(0, 200))
def test_ppow_exponent_law(x, s, t):
    lhs = ppow(S(x), S(s + t))
    rhs = ppow(S(x), S(s)) * ppow(S(x), S(t))
    assert lhs.agreement(rhs) >= min(lhs.eff, rhs.eff)


@given(st.integers(1, MOD - 1))
def test_exp_log_round_trip_on_one_plus_p(k):
    x = S(1 + P * k)
    back = pexp(iwasawa_log(x))
    assert back.agreement(x) >= back.eff


def test_approx_scalar_tracks_denominators():
    a = ApproxScalar.exact(P, Fraction(1, 5), 6)
    b = ApproxScalar.exact(P, Fraction(3, 2), 6)
    prod = a * b
    assert prod.value.denominator == 5
    assert residue(prod.value * 5, P, 5) == residue(Fraction(3, 2), P, 5)
    assert (a - a).valuation >= 6
    with pytest.raises(NonUnit):
        a / ApproxScalar(P, Fraction(0), 6)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6).filter(lambda d: d % P))
def test_approx_exact_constants_agree_with_residues(num, den):
    x = ApproxScalar.exact(P, Fraction(num, den), N)
    assert x.to_scalar(N).value == residue(Fraction(num, den), P, N)
    assert vp(x.to_scalar(N).value - num * pow(den, -1, MOD), P) >= N
