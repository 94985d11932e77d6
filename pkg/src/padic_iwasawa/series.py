"""Truncated power series over Z/p^N and the Frobenius operators on them.

A ``TruncatedSeries`` stores integer coefficients modulo ``p^N`` for the
monomials ``T^0 .. T^(L-1)``.  Operations that lose reliable terms return a
shorter series, so ``len(series)`` is always the trustworthy length.  A
non-zero ``denom`` means the stored coefficients are ``p^denom`` times the
true ones, which lets formal logarithms live in the same type.

Many operators are computed in the basis ``X = 1 + T``, where Frobenius is
``X -> X^p`` and psi reads off the exponents divisible by p.
"""
from __future__ import annotations

from functools import lru_cache

from . import polyarith as pa
from .errors import (
    IntegralityViolation,
    NonUnitConstantTerm,
    NotInImage,
    NotPsiZero,
    TruncationTooShort,
)
from .padic import INF, PadicScalar, ceil_log, iwasawa_log, vp


class TruncatedSeries:
    __slots__ = ("p", "N", "coeffs", "eff", "denom")

    def __init__(self, p: int, N: int, coeffs, eff: int | None = None, denom: int = 0):
        self.p = p
        self.N = N
        mod = p**N
        self.coeffs = [int(c) % mod for c in coeffs]
        self.eff = N if eff is None else max(0, min(eff, N))
        self.denom = denom

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, p: int, N: int, coeffs: list[int], eff: int, denom: int = 0) -> "TruncatedSeries":
        obj = cls.__new__(cls)
        obj.p, obj.N, obj.coeffs, obj.eff, obj.denom = p, N, coeffs, max(0, min(eff, N)), denom
        return obj

    @classmethod
    def constant(cls, p: int, N: int, c: int, length: int) -> "TruncatedSeries":
        return cls(p, N, [c] + [0] * (length - 1))

    @classmethod
    def polynomial(cls, p: int, N: int, coeffs, length: int) -> "TruncatedSeries":
        coeffs = list(coeffs)[:length]
        return cls(p, N, coeffs + [0] * (length - len(coeffs)))

    def _like(self, coeffs: list[int], eff: int | None = None, denom: int | None = None) -> "TruncatedSeries":
        return TruncatedSeries._raw(
            self.p, self.N, coeffs, self.eff if eff is None else eff,
            self.denom if denom is None else denom,
        )

    # basic protocol ---------------------------------------------------
    @property
    def modulus(self) -> int:
        return self.p**self.N

    def __len__(self) -> int:
        return len(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        return f"TruncatedSeries(p={self.p}, N={self.N}, len={len(self)}, eff={self.eff}, [{head}, ...])"

    def coeff(self, j: int) -> PadicScalar:
        if self.denom:
            raise IntegralityViolation("series carries a denominator")
        return PadicScalar(self.p, self.N, self.coeffs[j], self.eff)

    def at_zero(self) -> PadicScalar:
        return self.coeff(0)

    def truncate(self, length: int) -> "TruncatedSeries":
        return self._like(self.coeffs[:length])

    def agreement(self, other: "TruncatedSeries", length: int | None = None) -> int:
        """Digits of agreement on the common reliable prefix."""
        if self.denom != other.denom:
            raise ValueError("compare series with equal denominators")
        L = min(len(self), len(other))
        if length is not None:
            L = min(L, length)
        v = min(self.eff, other.eff)
        for a, b in zip(self.coeffs[:L], other.coeffs[:L]):
            if a != b:
                v = min(v, vp(a - b, self.p))
        return v

    def is_zero(self, length: int | None = None) -> bool:
        L = len(self) if length is None else length
        m = self.p**self.eff
        return all(c % m == 0 for c in self.coeffs[:L])

    # ring operations --------------------------------------------------
    def _align(self, other: "TruncatedSeries") -> tuple[list[int], list[int], int, int]:
        if other.p != self.p or other.N != self.N:
            raise ValueError("series over different rings")
        L = min(len(self), len(other))
        d = max(self.denom, other.denom)
        a = self.coeffs[:L]
        b = other.coeffs[:L]
        mod = self.modulus
        if self.denom < d:
            s = self.p ** (d - self.denom)
            a = [x * s % mod for x in a]
        if other.denom < d:
            s = self.p ** (d - other.denom)
            b = [x * s % mod for x in b]
        eff = min(self.eff + d - self.denom, other.eff + d - other.denom)
        return a, b, d, eff

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b, d, eff = self._align(other)
        mod = self.modulus
        return self._like([(x + y) % mod for x, y in zip(a, b)], eff, d)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b, d, eff = self._align(other)
        mod = self.modulus
        return self._like([(x - y) % mod for x, y in zip(a, b)], eff, d)

    def __neg__(self) -> "TruncatedSeries":
        mod = self.modulus
        return self._like([(-x) % mod for x in self.coeffs])

    def scale(self, s: "int | PadicScalar") -> "TruncatedSeries":
        eff = self.eff
        if isinstance(s, PadicScalar):
            eff = min(eff + s.valuation, s.eff)
            s = s.value
        return self._like(pa.scale(self.coeffs, s, self.modulus), eff)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        L = min(len(self), len(other))
        coeffs = pa.mul(self.coeffs[:L], other.coeffs[:L], self.modulus, L)
        coeffs += [0] * (L - len(coeffs))
        return self._like(coeffs, min(self.eff, other.eff), self.denom + other.denom)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        if self.denom:
            raise IntegralityViolation("cannot invert a series with a denominator")
        if self.coeffs[0] % self.p == 0:
            raise NonUnitConstantTerm("constant term is not a unit")
        return self._like(pa.inverse(self.coeffs, self.modulus, len(self)))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self * other.inverse()

    def __pow__(self, k: int) -> "TruncatedSeries":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = TruncatedSeries.constant(self.p, self.N, 1, len(self))
        result.eff = base.eff
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def to_integral(self) -> "TruncatedSeries":
        """Clear the stored denominator, checking the result is integral."""
        if not self.denom:
            return self
        q = self.p**self.denom
        m = self.p**min(self.denom, self.eff)
        for j, c in enumerate(self.coeffs):
            if c % m:
                raise IntegralityViolation(f"coefficient {j} is not integral")
        return self._like([c // q for c in self.coeffs], self.eff - self.denom, 0)


# ---------------------------------------------------------------------------
# helpers in the X = 1 + T basis


def to_x_basis(coeffs: list[int], mod: int, limit: int | None = None) -> list[int]:
    """Coefficients of ``f(X - 1)``."""
    return pa.taylor_shift(coeffs, -1, mod, limit)


def from_x_basis(coeffs: list[int], mod: int, limit: int | None = None) -> list[int]:
    """Coefficients in T of ``F(1 + T)``."""
    return pa.taylor_shift(coeffs, 1, mod, limit)


def binomial_series(c: "int | PadicScalar", p: int, N: int, length: int) -> TruncatedSeries:
    """``(1+T)^c`` modulo ``T^length``; a p-adic exponent costs ``ceil(log_p length)`` digits."""
    loss = ceil_log(length, p)
    exact_mod = p ** (N + loss)
    if isinstance(c, PadicScalar):
        eff = c.eff - loss if c.eff < c.N else N
        c = c.value
    else:
        eff = N
    if not 0 <= c < 64:
        c %= exact_mod
    coeffs = pa.binomial_power(c, length, p**N)
    return TruncatedSeries(p, N, coeffs, eff)


def frobenius_power(f: TruncatedSeries, c: int, length: int | None = None) -> TruncatedSeries:
    """``f((1+T)^c - 1)`` for a small positive integer ``c`` via ``X -> X^c``."""
    L = len(f) if length is None else length
    mod = f.modulus
    F = to_x_basis(f.coeffs, mod)
    base = pa.binomial_power(c, c + 1, mod)
    return f._like(pa.compose_short(F, base, mod, L))


def phi(f: TruncatedSeries) -> TruncatedSeries:
    """Frobenius ``f((1+T)^p - 1)``; the length is preserved exactly."""
    return frobenius_power(f, f.p)


def compose_cyclotomic(f: TruncatedSeries, c: "int | PadicScalar") -> TruncatedSeries:
    """``f((1+T)^c - 1)`` for any p-adic integer ``c``.

    Small positive integers go through the X basis, small negative ones
    through the reversed X polynomial.  Other exponents use Horner's rule on
    the binomial series, which is quadratic in the length.
    """
    L = len(f)
    mod = f.modulus
    value = c.value if isinstance(c, PadicScalar) else c
    if isinstance(c, PadicScalar) and c.eff == c.N and value > mod // 2:
        value -= mod
    if 0 < value <= 64:
        return frobenius_power(f, value)
    if -64 <= value < 0 and (not isinstance(c, PadicScalar) or c.eff == c.N):
        k = -value
        F = to_x_basis(f.coeffs, mod)
        rev = F[::-1]
        spread = [0] * (k * (len(rev) - 1) + 1)
        spread[::k] = rev
        shifted = TruncatedSeries._raw(f.p, f.N, from_x_basis(spread, mod, L), f.eff)
        corr = binomial_series(-k * (len(F) - 1), f.p, f.N, L)
        out = shifted * corr
        return f._like(out.coeffs)
    if value == 0:
        return TruncatedSeries._raw(f.p, f.N, [f.coeffs[0]] + [0] * (L - 1), f.eff, f.denom)
    q = binomial_series(c, f.p, f.N, L)
    q.coeffs[0] = (q.coeffs[0] - 1) % mod
    out = pa.compose(f.coeffs, q.coeffs, mod, L)
    return f._like(out, min(f.eff, q.eff))


def _psi_length(L: int, p: int, N: int) -> int:
    return max(1, L // p - N)


def phi_section(h: TruncatedSeries, check: bool = True) -> TruncatedSeries:
    """The unique ``g`` with ``phi(g) = h``, read from X-exponents divisible by p."""
    p, mod = h.p, h.modulus
    L = len(h)
    out_len = _psi_length(L, p, h.N)
    H = to_x_basis(h.coeffs, mod)
    g = h._like(from_x_basis(H[::p], mod, out_len))
    if check:
        span = min(L, p * (out_len - h.N + 1))
        if span > 0 and frobenius_power(g, p, span).agreement(h, span) < min(g.eff, h.eff):
            raise NotInImage("series is not a Frobenius image")
    return g


class CyclotomicCoeffSeries:
    """Series with coefficients in ``Z/p^N[Y]/(Phi_p(Y))``.

    ``comps[r]`` is the coefficient list of ``Y^r`` for ``r < p-1``.  The
    basis of the series variable (T or X) is the caller's convention.
    """

    def __init__(self, p: int, N: int, comps: list[list[int]], eff: int | None = None):
        self.p, self.N = p, N
        self.comps = comps
        self.eff = N if eff is None else eff

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def __len__(self) -> int:
        return len(self.comps[0])

    @classmethod
    def from_residue_classes(cls, p: int, N: int, parts: list[list[int]], eff: int | None = None):
        """Build ``sum_r Y^r parts[r]`` for ``r < p`` and reduce with ``Phi_p``."""
        mod = p**N
        top = parts[p - 1]
        comps = [pa.sub(parts[r], top, mod) for r in range(p - 1)]
        return cls(p, N, comps, eff)

    @classmethod
    def twist(cls, f: TruncatedSeries, length: int) -> "CyclotomicCoeffSeries":
        """``f(Y(1+T) - 1)`` modulo ``T^length`` in the T basis."""
        p, mod = f.p, f.modulus
        F = to_x_basis(f.coeffs, mod)
        base = pa.binomial_power(p, p + 1, mod)
        parts = []
        for r in range(p):
            inner = pa.compose_short(F[r::p], base, mod, length)
            shift = pa.binomial_power(r, r + 1, mod)
            prod = pa.mul(inner, shift, mod, length)
            parts.append(prod + [0] * (length - len(prod)))
        return cls.from_residue_classes(p, f.N, parts, f.eff)

    def conjugate(self, a: int) -> "CyclotomicCoeffSeries":
        """Galois action ``Y -> Y^a``."""
        p = self.p
        parts = [[0] * len(self) for _ in range(p)]
        for r, c in enumerate(self.comps):
            parts[r * a % p] = c
        return CyclotomicCoeffSeries.from_residue_classes(p, self.N, parts, self.eff)

    def __mul__(self, other: "CyclotomicCoeffSeries") -> "CyclotomicCoeffSeries":
        p, mod = self.p, self.modulus
        L = min(len(self), len(other))
        width = 2 * p - 3
        a = [0] * (L * width)
        b = [0] * (L * width)
        for r in range(p - 1):
            a[r::width] = self.comps[r][:L]
            b[r::width] = other.comps[r][:L]
        prod = pa.mul(a, b, mod, L * width)
        prod += [0] * (L * width - len(prod))
        parts = [[0] * L for _ in range(p)]
        for s in range(width):
            col = prod[s::width][:L]
            tgt = parts[s % p]
            parts[s % p] = pa.add(tgt, col, mod)
        return CyclotomicCoeffSeries.from_residue_classes(p, self.N, parts, min(self.eff, other.eff))

    def scale_series(self, f: list[int]) -> "CyclotomicCoeffSeries":
        mod = self.modulus
        L = len(self)
        comps = []
        for c in self.comps:
            prod = pa.mul(c, f, mod, L)
            comps.append(prod + [0] * (L - len(prod)))
        return CyclotomicCoeffSeries(self.p, self.N, comps, self.eff)

    def trace(self) -> list[int]:
        """Sum of the ``p - 1`` Galois conjugates."""
        mod = self.modulus
        out = pa.scale(self.comps[0], self.p - 1, mod)
        for c in self.comps[1:]:
            out = pa.sub(out, c, mod)
        return out

    def is_rational(self) -> bool:
        m = self.p**self.eff
        return all(x % m == 0 for c in self.comps[1:] for x in c)


def psi(f: TruncatedSeries) -> TruncatedSeries:
    """Left inverse of Frobenius: ``phi(psi f) = (1/p) sum over zeta^p = 1 of f(zeta(1+T)-1)``.

    The root-of-unity average is taken on the cyclotomic carrier in the X
    basis, where it keeps exactly the exponents divisible by p.
    """
    p, N = f.p, f.N
    big = p ** (N + 1)
    F = to_x_basis(f.coeffs, f.modulus)
    parts = [[0] * len(F) for _ in range(p)]
    for r in range(p):
        parts[r][r::p] = F[r::p]
    carrier = CyclotomicCoeffSeries.from_residue_classes(p, N + 1, parts)
    total = pa.add(F, carrier.trace(), big)
    if any(x % p for x in total):
        raise IntegralityViolation("root-of-unity average is not divisible by p")
    image = [x // p for x in total]
    if any(image[i] for i in range(len(image)) if i % p):
        raise NotInImage("average has exponents prime to p")
    out_len = _psi_length(len(f), p, N)
    return f._like(from_x_basis(image[::p], f.modulus, out_len))


# ---------------------------------------------------------------------------
# differential operators


def big_d(f: TruncatedSeries) -> TruncatedSeries:
    """``D = (1+T) d/dT``."""
    mod = f.modulus
    c = f.coeffs
    L = len(c)
    out = [0] * L
    for j in range(L):
        v = j * c[j]
        if j + 1 < L:
            v += (j + 1) * c[j + 1]
        out[j] = v % mod
    # the top coefficient needs c[L], which is unknown
    return f._like(out[: L - 1])


def derivative(f: TruncatedSeries) -> TruncatedSeries:
    mod = f.modulus
    return f._like([(j * f.coeffs[j]) % mod for j in range(1, len(f))])


def delta(f: TruncatedSeries) -> TruncatedSeries:
    """Logarithmic derivative ``D f / f``."""
    return big_d(f) * f.truncate(len(f) - 1).inverse()


def _antiderivative(h: TruncatedSeries, check: bool) -> TruncatedSeries:
    """Integral of ``h`` with zero constant, dividing exactly by ``j + 1``."""
    p, mod = h.p, h.modulus
    L = len(h) + 1
    loss = 0
    out = [0] * L
    for j, c in enumerate(h.coeffs):
        k = j + 1
        v = vp(k, p)
        if v:
            q = p**v
            if check and c % q:
                raise IntegralityViolation(f"coefficient of T^{k} is not integral")
            loss = max(loss, v)
            c //= q
            k //= q
        out[j + 1] = c * pow(k, -1, mod) % mod
    return h._like(out, h.eff - loss)


def big_d_inverse(g: TruncatedSeries) -> TruncatedSeries:
    """Inverse of D on series killed by psi, normalised so that psi kills the result."""
    ps = psi(g)
    if not ps.is_zero():
        raise NotPsiZero("psi(g) must vanish")
    one_plus_t = TruncatedSeries.polynomial(g.p, g.N, [1, 1], len(g))
    h = g * one_plus_t.inverse()
    G = _antiderivative(h, check=True)
    rest = psi(G)
    const = rest.coeffs[0]
    m = g.p**G.eff
    if any(c % m for c in rest.coeffs[1:]):
        raise NotPsiZero("psi of the antiderivative is not constant")
    G.coeffs[0] = (G.coeffs[0] - const) % G.modulus
    return G


def log_series(f: TruncatedSeries) -> TruncatedSeries:
    """Formal ``log f`` (Iwasawa branch on the constant), carried with a p-power denominator."""
    p = f.p
    L = len(f)
    d = max(vp(k, p) for k in range(1, L + 1))
    ratio = derivative(f) * f.truncate(L - 1).inverse()
    mod = f.modulus
    out = [0] * L
    scale = p**d
    for j, c in enumerate(ratio.coeffs):
        k = j + 1
        v = vp(k, p)
        out[k] = c * p ** (d - v) * pow(k // p**v, -1, mod) % mod
    out[0] = iwasawa_log(f.at_zero()).value * scale % mod
    return TruncatedSeries._raw(p, f.N, out, f.eff, d)


# ---------------------------------------------------------------------------
# norm


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and _is_small_prime(q)):
            return g
    return 1


def _is_small_prime(q: int) -> bool:
    return q > 1 and all(q % d for d in range(2, int(q**0.5) + 1))


def _galois_norm(h: CyclotomicCoeffSeries) -> CyclotomicCoeffSeries:
    """Product of all Galois conjugates of ``h`` via an addition chain on the cyclic group."""
    p = h.p
    g = _primitive_root(p)
    order = p - 1
    # acc holds the product of sigma_{g^j}(h) for j < k
    acc, k = h, 1
    for bit in bin(order)[3:]:
        acc = acc * acc.conjugate(pow(g, k, p))
        k *= 2
        if bit == "1":
            acc = acc * h.conjugate(pow(g, k, p))
            k += 1
    return acc


def coleman_norm(f: TruncatedSeries) -> TruncatedSeries:
    """Coleman norm: ``phi(N f)(T) = prod over zeta^p = 1 of f(zeta(1+T) - 1)``."""
    p, N = f.p, f.N
    L = len(f)
    Lh = L - N * (p - 1)
    if Lh <= p * (N + 1):
        raise ValueError("series too short for a reliable norm")
    h = CyclotomicCoeffSeries.twist(f, Lh)
    prod = _galois_norm(h).scale_series(f.coeffs[:Lh])
    if not prod.is_rational():
        raise NotInImage("norm product is not Galois invariant")
    image = TruncatedSeries._raw(p, N, prod.comps[0], f.eff)
    return phi_section(image)


# ---------------------------------------------------------------------------
# moments


@lru_cache(maxsize=None)
def stirling_row_weighted(k: int) -> tuple[int, ...]:
    """``j! S(k, j)`` for ``j = 0..k`` (surjection counts)."""
    row = [1]
    for n in range(1, k + 1):
        new = [0] * (n + 1)
        for j in range(1, n + 1):
            prev = row[j] if j < len(row) else 0
            new[j] = j * (prev + row[j - 1])
        row = new
    return tuple(row)


def series_moment(f: TruncatedSeries, k: int) -> PadicScalar:
    """``(D^k f)(0)``, the k-th moment of the measure with transform f."""
    if k >= len(f):
        raise TruncationTooShort(f"moment {k} needs {k + 1} coefficients")
    w = stirling_row_weighted(k)
    total = sum(f.coeffs[j] * w[j] for j in range(k + 1))
    return PadicScalar(f.p, f.N, total, f.eff)


__all__ = [
    "TruncatedSeries",
    "CyclotomicCoeffSeries",
    "binomial_series",
    "compose_cyclotomic",
    "phi",
    "psi",
    "phi_section",
    "big_d",
    "big_d_inverse",
    "delta",
    "log_series",
    "coleman_norm",
    "series_moment",
    "to_x_basis",
    "from_x_basis",
    "INF",
]
