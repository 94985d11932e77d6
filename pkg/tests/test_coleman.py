from fractions import Fraction

import pytest

from oracles import cw_substitution, residue
from padic_iwasawa.coleman import (
    col,
    cw,
    cyclotomic_series,
    cyclotomic_unit,
    kappa_p,
    multiply,
    restricted_unit_measure,
    unit_product,
)
from padic_iwasawa.errors import DegenerateExponent, NonUnit
from padic_iwasawa.measures import teichmuller_table
from padic_iwasawa.padic import PadicContext
from padic_iwasawa.series import coleman_norm, compose_cyclotomic, delta, series_moment

P, N, n = 5, 6, 2
CTX = PadicContext(P, N, n)
MOD = P**N


@pytest.mark.parametrize("c", [2, 3, 7])
def test_cyclotomic_series_constant_term(c):
    assert cyclotomic_series(CTX, c).at_zero().value == pow(c, -1, MOD)


def test_cyclotomic_series_rejects_bad_exponents():
    with pytest.raises(NonUnit):
        cyclotomic_series(CTX, 10)
    with pytest.raises(DegenerateExponent):
        cyclotomic_series(CTX, 1)


@pytest.mark.parametrize("c", [2, 3])
def test_cyclotomic_series_is_norm_fixed(c):
    f = cyclotomic_series(CTX, c)
    g = coleman_norm(f)
    m = len(g)
    assert g.agreement(f.truncate(m)) >= N - 1


def test_col_of_trivial_unit_is_zero():
    eps = unit_product(CTX, [])
    assert not any(col(eps).coeffs)


def test_col_is_additive():
    a, b = cyclotomic_unit(CTX, 2), cyclotomic_unit(CTX, 3)
    ab = multiply(a, b)
    assert col(ab).agreement(col(a) + col(b)) >= N - 1


def test_col_ignores_roots_of_unity():
    f = cyclotomic_series(CTX, 2)
    w = teichmuller_table(P, N)[2]
    assert delta(f * w).agreement(delta(f)) >= N


@pytest.mark.parametrize("c", [2, 3, 7])
def test_cw_one(c):
    assert cw(cyclotomic_unit(CTX, c), 1).value == residue(Fraction(1 - c, 2), P, N)


@pytest.mark.parametrize("c", [2, 3])
def test_cw_against_substitution_oracle(c):
    want = cw_substitution(c, 8)
    eps = cyclotomic_unit(CTX, c)
    for k in range(1, 9):
        assert cw(eps, k).value == residue(want[k - 1], P, N)


def test_cw_rejects_k_zero():
    with pytest.raises(ValueError):
        cw(cyclotomic_unit(CTX, 2), 0)


@pytest.mark.parametrize("a", [2, 3, -1])
def test_cw_gamma_equivariance(a):
    g = delta(cyclotomic_series(CTX, 2))
    h = delta(compose_cyclotomic(cyclotomic_series(CTX, 2), a))
    for k in range(1, 7):
        lhs = series_moment(h, k - 1)
        rhs = series_moment(g, k - 1) * pow(a, k, MOD)
        assert lhs.agreement(rhs) >= N - 1


@pytest.mark.parametrize("c", [2, 3])
def test_restricted_unit_measure_has_mass_zero(c):
    assert restricted_unit_measure(cyclotomic_unit(CTX, c)).mass().value == 0


def test_restricted_unit_measure_is_additive():
    a, b = cyclotomic_unit(CTX, 2), cyclotomic_unit(CTX, 3)
    lhs = restricted_unit_measure(multiply(a, b))
    rhs = restricted_unit_measure(a) + restricted_unit_measure(b)
    assert lhs.agreement(rhs) >= N - 1


def test_kappa_vanishes_on_trivial_unit():
    assert kappa_p(unit_product(CTX, [])).value == 0


def test_kappa_is_additive():
    a, b = cyclotomic_unit(CTX, 2), cyclotomic_unit(CTX, 3)
    lhs = kappa_p(multiply(a, b))
    rhs = kappa_p(a) + kappa_p(b)
    assert lhs.agreement(rhs) >= n - 1
