from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bernoulli_oracle
from padic_iwasawa.bernoulli import (
    bernoulli,
    bernoulli_mod_p,
    bernoulli_table,
    irregular_pairs,
    irregular_pairs_exact,
)

SMALL_PRIMES = [p for p in range(3, 200) if all(p % d for d in range(2, int(p**0.5) + 1))]


def test_table_matches_oracle():
    assert list(bernoulli_table(40)) == bernoulli_oracle(40)


def test_known_values():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(13) == 0


@pytest.mark.parametrize("p", [5, 7, 11, 13, 37])
def test_mod_p_table_matches_exact(p):
    B = bernoulli_table(p - 3)
    for k, r in enumerate(bernoulli_mod_p(p)):
        x = B[k]
        assert (x.numerator - r * x.denominator) % p == 0


@pytest.mark.parametrize("p", [5, 7, 11, 31])
def test_regular_primes(p):
    assert irregular_pairs(p) == []


def test_first_irregular_prime():
    assert irregular_pairs(37) == [(37, 32)]


def test_ramanujan_691():
    assert (691, 12) in irregular_pairs(691)


def test_known_multi_pair_prime():
    assert irregular_pairs(157) == [(157, 62), (157, 110)]


@given(st.sampled_from(SMALL_PRIMES))
def test_scanner_matches_exact_oracle(p):
    assert irregular_pairs(p) == irregular_pairs_exact(p)


@pytest.mark.parametrize("p", [2, 1, 9, 91])
def test_scanner_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        irregular_pairs(p)
