from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import iwasawa_log_oracle, residue
from padic_iwasawa.errors import NotInImage, NotPsiZero
from padic_iwasawa.padic import PadicContext, PadicScalar
from padic_iwasawa.series import (
    TruncatedSeries,
    big_d,
    big_d_inverse,
    binomial_series,
    coleman_norm,
    compose_cyclotomic,
    delta,
    log_series,
    phi,
    phi_section,
    psi,
    series_moment,
)
from padic_iwasawa.zeta import e1c

P, N, L = 5, 6, 120
MOD = P**N


def poly(coeffs, length=L, p=P, n=N):
    return TruncatedSeries.polynomial(p, n, coeffs, length)


def one_plus_t_pow(k, length=L):
    return poly([comb(k, j) for j in range(k + 1)], length)


def T():
    return poly([0, 1])


def same(a, b):
    n = min(len(a), len(b))
    return a.truncate(n).agreement(b.truncate(n)) >= min(a.eff, b.eff)


coeff_lists = st.lists(st.integers(0, MOD - 1), min_size=L, max_size=L)
unit_lists = coeff_lists.map(lambda c: [c[0] - c[0] % P + 1] + c[1:])


def test_compose_cyclotomic_examples():
    t = T()
    assert same(compose_cyclotomic(t, 1), t)
    assert same(compose_cyclotomic(t, 2), poly([0, 2, 1]))
    assert same(compose_cyclotomic(t, P), poly([0] + [comb(P, k) for k in range(1, P + 1)]))


@pytest.mark.parametrize("c", [-7, -2, 3, 200, 5**7 + 3])
def test_compose_cyclotomic_routes_agree_with_horner(c):
    f = poly([3, 1, 4, 1, 5, 9, 2, 6], 40)
    q = binomial_series(c, P, N, 40)
    want = poly([0], 40)
    power = poly([1], 40)
    q.coeffs[0] = 0
    for a in f.coeffs[:8]:
        want = want + power.scale(a)
        power = power * q
    assert same(compose_cyclotomic(f, c), want)


def test_phi_examples():
    assert same(phi(poly([1])), poly([1]))
    assert same(phi(T()), one_plus_t_pow(P) - poly([1]))
    assert same(phi(poly([1, 1])), one_plus_t_pow(P))


def test_psi_examples():
    assert same(psi(poly([1])), poly([1]))
    assert same(psi(one_plus_t_pow(P)), poly([1, 1]))
    assert psi(poly([1, 1])).is_zero()
    assert same(psi(one_plus_t_pow(3 * P)), one_plus_t_pow(3))


def test_psi_output_length():
    assert len(psi(poly([1]))) == L // P - N


def test_phi_section_examples():
    assert same(phi_section(poly([1])), poly([1]))
    assert same(phi_section(one_plus_t_pow(P) - poly([1])), T())
    assert same(phi_section(one_plus_t_pow(2 * P)), one_plus_t_pow(2))
    with pytest.raises(NotInImage):
        phi_section(poly([1, 1]))


def test_delta_and_big_d_examples():
    assert same(delta(poly([1, 1])), poly([1]))
    assert delta(poly([7])).is_zero()
    assert same(big_d(poly([1, 1])), poly([1, 1]))
    assert same(big_d(poly([0, 0, 1])), poly([0, 2, 2]))


def test_coleman_norm_examples():
    assert same(coleman_norm(poly([1], 200)), poly([1], 200))
    assert same(coleman_norm(poly([1, 1], 200)), poly([1, 1], 200))


@pytest.mark.parametrize("p,c", [(3, 2), (5, 3), (5, 2), (7, 3), (11, 2)])
def test_coleman_norm_fixes_cyclotomic_series(p, c):
    n = 5
    length = p * p * (n + 4) + n * (p - 1) + 8
    power = binomial_series(c, p, n, length + 1)
    f = TruncatedSeries(p, n, power.coeffs[1:]).inverse()
    assert same(coleman_norm(f), f)


def test_coleman_norm_rejects_non_norm_fixed():
    f = poly([1, P], 200)
    assert not same(coleman_norm(f), f)


def test_log_series_examples():
    assert log_series(poly([1])).is_zero()
    f = poly([1, 1])
    # D log f = Delta f, after clearing the carried denominator
    lg = log_series(f)
    numer = big_d(lg)
    numer = TruncatedSeries(P, N, numer.coeffs, numer.eff)
    assert same(numer, delta(f).scale(P**lg.denom))


def test_big_d_inverse_rejects_psi_nonzero():
    with pytest.raises(NotPsiZero):
        big_d_inverse(poly([1]))


def test_big_d_inverse_at_zero_gives_f_mass():
    ctx = PadicContext(P, 8, 2)
    for c in (2, 3):
        E = e1c(ctx, c)
        g = big_d_inverse(E.restricted_series(P * (ctx.N + 3)))
        expected = (1 - Fraction(1, P)) * iwasawa_log_oracle(pow(c, -1, P**10), P, 10)
        assert g.at_zero().agreement(PadicScalar.of(P, ctx.N, residue(expected, P, 8))) >= ctx.N - 2


def test_series_moment_of_point_masses():
    for a in range(0, 12):
        f = one_plus_t_pow(a)
        for k in range(6):
            assert series_moment(f, k).value == a**k % MOD


@given(coeff_lists)
def test_psi_phi_identity(c):
    f = TruncatedSeries(P, N, c)
    assert same(psi(phi(f)), f)


@given(coeff_lists, coeff_lists)
def test_psi_projection_formula(a, b):
    f = TruncatedSeries(P, N, a)
    g = TruncatedSeries(P, N, b)
    assert same(psi(phi(f) * g), f * psi(g))


@given(coeff_lists)
def test_phi_section_inverts_phi(c):
    f = TruncatedSeries(P, N, c)
    assert same(phi_section(phi(f)), f)


@given(unit_lists, unit_lists)
def test_delta_is_additive(a, b):
    f = TruncatedSeries(P, N, a)
    g = TruncatedSeries(P, N, b)
    assert same(delta(f * g), delta(f) + delta(g))


@given(unit_lists, unit_lists)
def test_log_series_is_additive(a, b):
    f = TruncatedSeries(P, N, a[:40])
    g = TruncatedSeries(P, N, b[:40])
    lhs, rhs = log_series(f * g), log_series(f) + log_series(g)
    assert lhs.denom == rhs.denom
    assert same(lhs, rhs)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    f, g, h = (TruncatedSeries(P, N, x) for x in (a, b, c))
    assert same((f * g) * h, f * (g * h))
    assert same(f * (g + h), f * g + f * h)
    assert same(f * g, g * f)


@given(unit_lists)
def test_inverse(a):
    f = TruncatedSeries(P, N, a)
    assert same(f * f.inverse(), poly([1]))


@given(coeff_lists)
def test_psi_prefix_is_reliable(c):
    """The length psi reports is exactly the part determined by the input prefix."""
    f = TruncatedSeries(P, N, c)
    short = psi(f.truncate(L // 2))
    assert same(short, psi(f))
