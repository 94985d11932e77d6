"""Fixed-precision p-adic integers and the standard p-adic functions.

A ``PadicScalar`` is a residue modulo ``p^N`` together with ``eff``, the
number of leading p-adic digits that are actually correct.  Results that may
have negative valuation (L-values, quotients by non-units) are carried as
``ApproxScalar``: an exact rational approximant plus an absolute precision.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonUnit, OutOfDomain

INF = 1 << 30


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(x: int, p: int) -> int:
    """p-adic valuation of an integer; ``INF`` for zero."""
    if x == 0:
        return INF
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def vp_fraction(x: Fraction, p: int) -> int:
    if x == 0:
        return INF
    return vp(x.numerator, p) - vp(x.denominator, p)


def ceil_log(x: int, p: int) -> int:
    """Smallest ``e`` with ``p^e >= x``."""
    e, q = 0, 1
    while q < x:
        q *= p
        e += 1
    return e


@dataclass(frozen=True)
class PadicContext:
    """Working parameters ``(p, N, n, M)``; ``M`` defaults to ``p^n N``."""

    p: int
    N: int
    n: int
    M: int | None = None

    def __post_init__(self) -> None:
        if self.p == 2 or not is_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if self.N < 1 or self.n < 1:
            raise ValueError("N and n must be positive")
        need = self.p**self.n * self.N
        if self.M is None:
            object.__setattr__(self, "M", need)
        elif self.M < need:
            raise ValueError(f"M={self.M} is below p^n*N={need}")

    @property
    def modulus(self) -> int:
        return self.p**self.N

    def scalar(self, value: int, eff: int | None = None) -> "PadicScalar":
        return PadicScalar(self.p, self.N, value, self.N if eff is None else eff)


@dataclass(frozen=True)
class PadicScalar:
    p: int
    N: int
    value: int
    eff: int

    def __post_init__(self) -> None:
        eff = max(0, min(self.eff, self.N))
        object.__setattr__(self, "eff", eff)
        object.__setattr__(self, "value", self.value % self.p**self.N)

    @classmethod
    def of(cls, p: int, N: int, x: "int | Fraction | PadicScalar") -> "PadicScalar":
        if isinstance(x, PadicScalar):
            return x
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise NonUnit(f"{x} is not p-integral")
            return cls(p, N, x.numerator * pow(x.denominator, -1, p**N), N)
        return cls(p, N, x, N)

    @property
    def modulus(self) -> int:
        return self.p**self.N

    @property
    def valuation(self) -> int:
        return min(vp(self.value, self.p), self.eff)

    def is_unit(self) -> bool:
        return self.eff > 0 and self.value % self.p != 0

    def _coerce(self, other) -> "PadicScalar":
        if isinstance(other, PadicScalar):
            if other.p != self.p:
                raise ValueError("mismatched primes")
            return other
        if isinstance(other, ApproxScalar):
            return other.to_scalar(self.N)
        return PadicScalar.of(self.p, self.N, other)

    def __add__(self, other) -> "PadicScalar":
        o = self._coerce(other)
        return PadicScalar(self.p, self.N, self.value + o.value, min(self.eff, o.eff))

    __radd__ = __add__

    def __neg__(self) -> "PadicScalar":
        return PadicScalar(self.p, self.N, -self.value, self.eff)

    def __sub__(self, other) -> "PadicScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PadicScalar":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PadicScalar":
        o = self._coerce(other)
        eff = min(self.eff + o.valuation, o.eff + self.valuation)
        return PadicScalar(self.p, self.N, self.value * o.value, eff)

    __rmul__ = __mul__

    def inverse(self) -> "PadicScalar":
        if not self.is_unit():
            raise NonUnit(f"{self.value} is not a unit mod {self.p}")
        return PadicScalar(self.p, self.N, pow(self.value, -1, self.modulus), self.eff)

    def __truediv__(self, other) -> "PadicScalar":
        return self * self._coerce(other).inverse()

    def __pow__(self, k: int) -> "PadicScalar":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return PadicScalar(self.p, self.N, 1, self.N)
        # relative precision is preserved; absolute precision shifts by (k-1)v
        eff = self.eff + (k - 1) * self.valuation
        return PadicScalar(self.p, self.N, pow(self.value, k, self.modulus), eff)

    def agreement(self, other) -> int:
        """Number of p-adic digits on which two scalars provably agree."""
        o = self._coerce(other)
        return min(vp(self.value - o.value, self.p), self.eff, o.eff)

    def balanced(self) -> int:
        m = self.modulus
        return self.value - m if self.value > m // 2 else self.value

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class ApproxScalar:
    """Element of Q_p known modulo ``p^prec``; ``value`` is a rational approximant."""

    p: int
    value: Fraction
    prec: int

    def __post_init__(self) -> None:
        v = Fraction(self.value)
        den_v = vp(v.denominator, self.p)
        unit_den = v.denominator // self.p**den_v
        digits = self.prec + den_v
        if digits <= 0:
            v = Fraction(0)
        else:
            m = self.p**digits
            v = Fraction(v.numerator * pow(unit_den, -1, m) % m, self.p**den_v)
        object.__setattr__(self, "value", v)

    @classmethod
    def exact(cls, p: int, x, prec: int = 64) -> "ApproxScalar":
        return cls(p, Fraction(x), prec)

    @classmethod
    def from_scalar(cls, x: PadicScalar) -> "ApproxScalar":
        return cls(x.p, Fraction(x.value), x.eff)

    @property
    def valuation(self) -> int:
        return min(vp_fraction(self.value, self.p), self.prec)

    def _coerce(self, other) -> "ApproxScalar":
        if isinstance(other, ApproxScalar):
            return other
        if isinstance(other, PadicScalar):
            return ApproxScalar.from_scalar(other)
        x = Fraction(other)
        if x == 0:
            return ApproxScalar(self.p, x, self.prec)
        # exact constants must never be the precision bottleneck
        room = abs(vp_fraction(x, self.p)) + abs(min(self.valuation, self.prec)) + 8
        return ApproxScalar(self.p, x, max(self.prec, 0) + 2 * room)

    def __add__(self, other) -> "ApproxScalar":
        o = self._coerce(other)
        return ApproxScalar(self.p, self.value + o.value, min(self.prec, o.prec))

    __radd__ = __add__

    def __neg__(self) -> "ApproxScalar":
        return ApproxScalar(self.p, -self.value, self.prec)

    def __sub__(self, other) -> "ApproxScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ApproxScalar":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ApproxScalar":
        o = self._coerce(other)
        prec = min(self.prec + o.valuation, o.prec + self.valuation)
        return ApproxScalar(self.p, self.value * o.value, prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ApproxScalar":
        o = self._coerce(other)
        vb = o.valuation
        if vb >= o.prec:
            raise NonUnit("division by a quantity indistinguishable from zero")
        prec = min(self.prec - vb, o.prec + self.valuation - 2 * vb)
        return ApproxScalar(self.p, self.value / o.value, prec)

    def __rtruediv__(self, other) -> "ApproxScalar":
        return self._coerce(other) / self

    def agreement(self, other) -> int:
        o = self._coerce(other)
        return min(vp_fraction(self.value - o.value, self.p), self.prec, o.prec)

    def to_scalar(self, N: int) -> PadicScalar:
        if self.value.denominator % self.p == 0:
            raise NonUnit("value is not p-integral")
        return _with_eff(PadicScalar.of(self.p, N, self.value), min(self.prec, N))

    def reduced(self, prec: int) -> "ApproxScalar":
        return ApproxScalar(self.p, self.value, min(prec, self.prec))

    def residue_string(self) -> str:
        return str(self.value)


def _with_eff(x: PadicScalar, eff: int) -> PadicScalar:
    return PadicScalar(x.p, x.N, x.value, eff)


def teichmuller(x: PadicScalar) -> PadicScalar:
    """The root of unity congruent to ``x`` mod p (N Frobenius iterations)."""
    if not x.is_unit():
        raise NonUnit("Teichmuller character needs a unit")
    m = x.modulus
    y = x.value
    for _ in range(x.N):
        y = pow(y, x.p, m)
    return PadicScalar(x.p, x.N, y, x.N)


def angle(x: PadicScalar) -> PadicScalar:
    """Projection ``x / omega(x)`` to the principal units."""
    return _with_eff(x * teichmuller(x).inverse(), x.eff)


@lru_cache(maxsize=None)
def _log_plan(p: int, N: int) -> tuple[int, int]:
    k = 1
    last = 1
    while k < 4 * N + 8:
        if k - vp(k, p) < N:
            last = k
        k += 1
    extra = max(vp(j, p) for j in range(1, last + 1))
    return last, extra


def _log1p_int(u: int, p: int, N: int) -> int:
    """``log(1+u) mod p^N`` for an integer ``u`` divisible by p."""
    last, extra = _log_plan(p, N)
    big = p ** (N + extra)
    m = p**N
    total = 0
    power = 1
    for k in range(1, last + 1):
        power = power * u % big
        if power == 0:
            break
        v = vp(k, p)
        term = (power // p**v) * pow(k // p**v, -1, m)
        total += term if k % 2 else -term
    return total % m


def iwasawa_log(x: PadicScalar) -> PadicScalar:
    """Iwasawa logarithm: ``log(<x>)`` on units, with ``log(p) = 0`` understood away."""
    if not x.is_unit():
        raise NonUnit("Iwasawa log is only implemented on units")
    u = angle(x).value - 1
    return PadicScalar(x.p, x.N, _log1p_int(u, x.p, x.N), x.eff)


@lru_cache(maxsize=None)
def _exp_plan(p: int, N: int) -> tuple[int, int]:
    def vfact(k: int) -> int:
        s, q = 0, p
        while q <= k:
            s += k // q
            q *= p
        return s

    last = 1
    for k in range(1, 4 * N + 8):
        if k - vfact(k) < N:
            last = k
    return last, vfact(last)


def pexp(x: PadicScalar) -> PadicScalar:
    """Exponential series; converges for ``v_p(x) >= 1`` when p is odd."""
    if x.valuation < 1:
        raise OutOfDomain("exp needs v_p(x) >= 1")
    p, N = x.p, x.N
    last, extra = _exp_plan(p, N)
    big = p ** (N + extra)
    m = p**N
    total = 1
    power = 1
    unit_fact = 1
    vfact = 0
    for k in range(1, last + 1):
        power = power * x.value % big
        v = vp(k, p)
        vfact += v
        unit_fact = unit_fact * (k // p**v) % m
        if power == 0:
            break
        total += (power // p**vfact) * pow(unit_fact, -1, m)
    return PadicScalar(p, N, total, x.eff)


def ppow(x: PadicScalar, s: "int | PadicScalar") -> PadicScalar:
    """``<x>^s = exp(s log x)`` for a unit ``x``."""
    lg = iwasawa_log(x)
    if isinstance(s, int):
        return pexp(lg * s)
    return pexp(s * lg)


def log_q(p: int, N: int) -> PadicScalar:
    """Logarithm of the fixed topological generator ``q = 1 + p``."""
    return iwasawa_log(PadicScalar(p, N, p + 1, N))
