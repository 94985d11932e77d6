"""Bernoulli numbers: an exact rational table and a mod-p irregular-pair scanner."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .padic import is_prime


@lru_cache(maxsize=None)
def bernoulli_table(K: int) -> tuple[Fraction, ...]:
    """``B_0 .. B_K`` from ``sum_{j <= k} binom(k+1, j) B_j = 0``, with ``B_1 = -1/2``."""
    B: list[Fraction] = []
    for k in range(K + 1):
        if k == 0:
            B.append(Fraction(1))
            continue
        s = sum(comb(k + 1, j) * B[j] for j in range(k))
        B.append(-s / (k + 1))
    return tuple(B)


def bernoulli(k: int) -> Fraction:
    return bernoulli_table(k)[k]


def bernoulli_mod_p(p: int) -> list[int]:
    """``B_k mod p`` for ``0 <= k <= p - 3``, all p-integral there."""
    if p < 5:
        return [1][: max(0, p - 2)]
    B = [1]
    binom_row = [1, 1]  # row k+1 of Pascal's triangle, mod p
    for k in range(1, p - 2):
        binom_row = [1] + [(binom_row[i] + binom_row[i + 1]) % p for i in range(len(binom_row) - 1)] + [1]
        s = sum(binom_row[j] * B[j] for j in range(k)) % p
        B.append(-s * pow(k + 1, -1, p) % p)
    return B


def irregular_pairs(p: int) -> list[tuple[int, int]]:
    """Pairs ``(p, k)`` with even ``2 <= k <= p - 3`` where ``p`` divides the numerator of ``B_k``."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    B = bernoulli_mod_p(p)
    return [(p, k) for k in range(2, p - 2, 2) if B[k] == 0]


def irregular_pairs_exact(p: int) -> list[tuple[int, int]]:
    """Same scan from the exact table; slow, used as an oracle."""
    B = bernoulli_table(max(p - 3, 0))
    return [(p, k) for k in range(2, p - 2, 2) if B[k].numerator % p == 0]
