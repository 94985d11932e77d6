"""Dense integer polynomial kernels modulo a prime power.

Polynomials are plain lists of ints, constant term first, every entry in
``[0, mod)``.  Large products go through Kronecker substitution on gmpy2
integers, which is much faster than Python's own Karatsuba at these sizes.
"""
from __future__ import annotations

import gmpy2

_SCHOOLBOOK = 12


def normalize(a: list[int], mod: int) -> list[int]:
    return [x % mod for x in a]


def add(a: list[int], b: list[int], mod: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % mod
    return out


def sub(a: list[int], b: list[int], mod: int) -> list[int]:
    n = max(len(a), len(b))
    out = list(a) + [0] * (n - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % mod
    return out


def scale(a: list[int], s: int, mod: int) -> list[int]:
    s %= mod
    return [x * s % mod for x in a]


def _schoolbook(a: list[int], b: list[int], mod: int, limit: int) -> list[int]:
    out = [0] * limit
    for i, x in enumerate(a):
        if x == 0 or i >= limit:
            continue
        for j, y in enumerate(b[: limit - i]):
            out[i + j] += x * y
    return [x % mod for x in out]


def mul(a: list[int], b: list[int], mod: int, limit: int | None = None) -> list[int]:
    """Product of ``a`` and ``b`` modulo ``mod``, optionally truncated to ``limit`` terms."""
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
        a = a[:size]
        b = b[:size]
    if size <= 0:
        return []
    if min(len(a), len(b)) <= _SCHOOLBOOK:
        return _schoolbook(a, b, mod, size)
    bits = 2 * mod.bit_length() + min(len(a), len(b)).bit_length() + 1
    prod = gmpy2.pack(a, bits) * gmpy2.pack(b, bits)
    raw = gmpy2.unpack(prod, bits)
    m = gmpy2.mpz(mod)
    out = [int(x % m) for x in raw[:size]]
    if len(out) < size:
        out.extend([0] * (size - len(out)))
    return out


def square(a: list[int], mod: int, limit: int | None = None) -> list[int]:
    return mul(a, a, mod, limit)


def inverse(a: list[int], mod: int, length: int) -> list[int]:
    """Power series inverse of ``a`` modulo ``T^length``; ``a[0]`` must be a unit."""
    g = [pow(a[0], -1, mod)]
    prec = 1
    while prec < length:
        prec = min(2 * prec, length)
        e = mul(a[:prec], g, mod, prec)
        e = [(-x) % mod for x in e]
        e[0] = (e[0] + 2) % mod
        g = mul(g, e, mod, prec)
    return g[:length] + [0] * (length - len(g))


def fold(a: list[int], period: int, mod: int) -> list[int]:
    """Reduce a polynomial modulo ``X^period - 1``."""
    out = [0] * period
    for i, x in enumerate(a):
        out[i % period] += x
    return [x % mod for x in out]


def compose_short(a: list[int], base: list[int], mod: int, limit: int | None = None) -> list[int]:
    """``sum a_i base^i`` for a short polynomial ``base``, optionally truncated.

    Divide and conquer: blocks merge pairwise as ``lo + base^(2^k) hi``.  All
    products of one level share a single Kronecker multiplication.
    """
    n = len(a)
    if n == 0:
        return []
    cap = limit if limit is not None else (n - 1) * (len(base) - 1) + 1
    flat = [x % mod for x in a]
    size = 1
    pw = [x % mod for x in base[:cap]]
    m = gmpy2.mpz(mod)
    while len(flat) > size:
        nb = -(-len(flat) // size)
        if nb % 2:
            flat.extend([0] * size)
            nb += 1
        flat.extend([0] * (nb * size - len(flat)))
        stride = size + len(pw) - 1
        new_size = min(stride, cap)
        pad = [0] * (stride - size)
        packed: list[int] = []
        for i in range(1, nb, 2):
            packed.extend(flat[i * size:(i + 1) * size])
            packed.extend(pad)
        bits = 2 * mod.bit_length() + min(size, len(pw)).bit_length() + 1
        raw = gmpy2.unpack(gmpy2.pack(packed, bits) * gmpy2.pack(pw, bits), bits)
        raw.extend([0] * (len(packed) - len(raw)))
        out: list[int] = []
        tail = [0] * (new_size - size) if new_size > size else []
        for j, i in enumerate(range(0, nb, 2)):
            lo = flat[i * size:(i + 1) * size][:new_size] + tail
            hi = raw[j * stride:j * stride + new_size]
            out.extend([int((x + y) % m) for x, y in zip(lo, hi)])
        flat = out
        size = new_size
        if len(flat) > size:
            pw = square(pw, mod, cap)
    out = flat[:cap]
    if limit is not None and len(out) < limit:
        out = out + [0] * (limit - len(out))
    return out


def taylor_shift(a: list[int], s: int, mod: int, limit: int | None = None) -> list[int]:
    """Coefficients of ``a(X + s)``, optionally truncated to ``limit`` terms."""
    return compose_short(a, [s, 1], mod, limit)


def binomial_power(c: int, length: int, mod: int) -> list[int]:
    """``(1 + T)^c`` modulo ``T^length`` for a non-negative integer ``c``."""
    if c < 64:
        out = [0] * length
        b = 1
        for k in range(min(c, length - 1) + 1):
            out[k] = b % mod
            b = b * (c - k) // (k + 1)
        return out
    result = [1] + [0] * (length - 1)
    base = [1, 1]
    e = c
    while e:
        if e & 1:
            result = mul(result, base, mod, length)
        e >>= 1
        if e:
            base = square(base, mod, length)
    return result + [0] * (length - len(result))


def compose(f: list[int], q: list[int], mod: int, length: int) -> list[int]:
    """``f(q(T))`` modulo ``T^length`` for ``q(0) = 0``, by Horner's rule."""
    out: list[int] = [0] * length
    for coeff in reversed(f[:length]):
        out = mul(out, q, mod, length)
        out = out + [0] * (length - len(out))
        out[0] = (out[0] + coeff) % mod
    return out
