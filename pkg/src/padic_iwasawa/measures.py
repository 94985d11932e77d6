"""Finite-level measures on Z_p and on Z_p^x.

A level-n measure on Z_p is its vector of masses on the residue classes
``i + p^n Z_p``; a measure on the units keeps only the classes prime to p,
stored in increasing residue order.  Under ``[i] -> (1+T)^i`` a level-n
measure is a power series modulo ``(1+T)^(p^n) - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import polyarith as pa
from .errors import (
    BadRegularizer,
    LevelMismatch,
    LevelTooSmall,
    MassNotZero,
    NegativePowerOnZp,
    NonUnit,
    TruncationTooShort,
)
from .padic import ApproxScalar, PadicScalar, iwasawa_log, log_q, teichmuller, vp
from .series import (
    TruncatedSeries,
    big_d,
    binomial_series,
    from_x_basis,
    phi,
    psi,
    to_x_basis,
)


# ---------------------------------------------------------------------------
# level bookkeeping


class LevelData:
    """Residue tables for ``Z/p^n``: units, balanced representatives, discrete logs."""

    def __init__(self, p: int, n: int):
        self.p, self.n = p, n
        self.P = P = p**n
        self.units = [u for u in range(P) if u % p]
        self.index = [-1] * P
        for k, u in enumerate(self.units):
            self.index[u] = k
        self.balanced = [i - P if i > P // 2 else i for i in range(P)]
        self.order = len(self.units)
        self.gen = primitive_root_mod_p2(p)
        self.power = [1] * self.order
        for e in range(1, self.order):
            self.power[e] = self.power[e - 1] * self.gen % P
        self.dlog = [-1] * P
        for e, u in enumerate(self.power):
            self.dlog[u] = e
        self.inverse = [0] * P
        for u in self.units:
            self.inverse[u] = pow(u, -1, P)


@lru_cache(maxsize=None)
def level_data(p: int, n: int) -> LevelData:
    return LevelData(p, n)


def primitive_root_mod_p2(p: int) -> int:
    """Smallest integer generating ``(Z/p^2)^x``, hence every ``(Z/p^n)^x``."""
    for g in range(2, p * p):
        if g % p and generates_mod_p2(g, p):
            return g
    raise ValueError("no primitive root")


def generates_mod_p2(c: int, p: int) -> bool:
    m = p * p
    c %= m
    if c % p == 0:
        return False
    order = p * (p - 1)
    for q in _prime_factors(order):
        if pow(c, order // q, m) == 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@lru_cache(maxsize=None)
def a_index(p: int, n: int) -> tuple[int, ...]:
    """``t(u) = log<u> / log q mod p^(n-1)`` for every residue ``u`` (``-1`` off the units)."""
    N = n + 1
    lq = log_q(p, N).value // p
    inv = pow(lq, -1, p ** (n - 1)) if n > 1 else 0
    out = [-1] * p**n
    for u in level_data(p, n).units:
        lg = iwasawa_log(PadicScalar(p, N, u, N)).value // p
        out[u] = lg * inv % p ** (n - 1) if n > 1 else 0
    return tuple(out)


@lru_cache(maxsize=None)
def teichmuller_table(p: int, N: int) -> tuple[int, ...]:
    """``omega(r) mod p^N`` for ``r = 0..p-1`` (entry 0 is unused)."""
    return (0,) + tuple(teichmuller(PadicScalar(p, N, r, N)).value for r in range(1, p))


# ---------------------------------------------------------------------------
# measure types


class _Measure:
    space = ""

    def __init__(self, p: int, N: int, level: int, coeffs, eff: int | None = None):
        self.p, self.N, self.level = p, N, level
        mod = p**N
        self.coeffs = [int(c) % mod for c in coeffs]
        if len(self.coeffs) != self._size():
            raise LevelMismatch(f"expected {self._size()} coefficients, got {len(self.coeffs)}")
        self.eff = N if eff is None else max(0, min(eff, N))

    def _size(self) -> int:
        raise NotImplementedError

    @property
    def modulus(self) -> int:
        return self.p**self.N

    @property
    def data(self) -> LevelData:
        return level_data(self.p, self.level)

    def _like(self, coeffs: list[int], eff: int | None = None):
        return type(self)(self.p, self.N, self.level, coeffs, self.eff if eff is None else eff)

    def _check(self, other: "_Measure") -> None:
        if type(other) is not type(self) or (other.p, other.N, other.level) != (self.p, self.N, self.level):
            raise LevelMismatch("measures live on different spaces or levels")

    def __add__(self, other):
        self._check(other)
        mod = self.modulus
        return self._like([(a + b) % mod for a, b in zip(self.coeffs, other.coeffs)], min(self.eff, other.eff))

    def __sub__(self, other):
        self._check(other)
        mod = self.modulus
        return self._like([(a - b) % mod for a, b in zip(self.coeffs, other.coeffs)], min(self.eff, other.eff))

    def __neg__(self):
        mod = self.modulus
        return self._like([(-a) % mod for a in self.coeffs])

    def scale(self, s: "int | PadicScalar"):
        eff = self.eff
        if isinstance(s, PadicScalar):
            eff = min(eff + s.valuation, s.eff)
            s = s.value
        return self._like(pa.scale(self.coeffs, s, self.modulus), eff)

    def mass(self) -> PadicScalar:
        return PadicScalar(self.p, self.N, sum(self.coeffs), self.eff)

    def agreement(self, other) -> int:
        self._check(other)
        v = min(self.eff, other.eff)
        for a, b in zip(self.coeffs, other.coeffs):
            if a != b:
                v = min(v, vp(a - b, self.p))
        return v

    def __eq__(self, other) -> bool:
        return (
            type(other) is type(self)
            and (other.p, other.N, other.level) == (self.p, self.N, self.level)
            and other.coeffs == self.coeffs
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}(p={self.p}, N={self.N}, level={self.level}, eff={self.eff})"


class ZpMeasure(_Measure):
    """Masses of the classes ``i + p^n Z_p`` for ``i = 0 .. p^n - 1``."""

    space = "Zp"

    def _size(self) -> int:
        return self.p**self.level

    def residues(self) -> list[int]:
        return list(range(self.p**self.level))


class UnitMeasure(_Measure):
    """Masses of the unit classes, in increasing residue order."""

    space = "Zp_units"

    def _size(self) -> int:
        return (self.p - 1) * self.p ** (self.level - 1)

    def residues(self) -> list[int]:
        return self.data.units

    def at(self, u: int) -> int:
        k = self.data.index[u % self.data.P]
        if k < 0:
            raise NonUnit(f"{u} is not a unit")
        return self.coeffs[k]


# ---------------------------------------------------------------------------
# constructors and the series dictionary


def dirac(c: int, p: int, N: int, n: int, space: str = "Zp_units"):
    P = p**n
    if space == "Zp":
        coeffs = [0] * P
        coeffs[c % P] = 1
        return ZpMeasure(p, N, n, coeffs)
    d = level_data(p, n)
    k = d.index[c % P]
    if k < 0:
        raise NonUnit(f"{c} is not a unit")
    coeffs = [0] * d.order
    coeffs[k] = 1
    return UnitMeasure(p, N, n, coeffs)


def zero_extend(mu: UnitMeasure) -> ZpMeasure:
    coeffs = [0] * mu.data.P
    for u, c in zip(mu.data.units, mu.coeffs):
        coeffs[u] = c
    return ZpMeasure(mu.p, mu.N, mu.level, coeffs, mu.eff)


def series_of(mu: "ZpMeasure | UnitMeasure", length: int | None = None) -> TruncatedSeries:
    """``sum_i mu(i) (1+T)^i`` truncated to ``length`` (default ``p^n N``)."""
    if isinstance(mu, UnitMeasure):
        mu = zero_extend(mu)
    L = mu.p**mu.level * mu.N if length is None else length
    coeffs = from_x_basis(mu.coeffs, mu.modulus, L)
    return TruncatedSeries(mu.p, mu.N, coeffs, mu.eff)


def measure_of_series(f: TruncatedSeries, n: int) -> ZpMeasure:
    """Level-n measure of a series: fold its X-basis polynomial modulo ``X^(p^n) - 1``.

    Exact once ``len(f) >= p^n N``, since then ``(X-1)^len`` lies in
    ``(p^N, X^(p^n) - 1)``.
    """
    if f.denom:
        raise ValueError("measure of a series with a denominator")
    P = f.p**n
    if len(f) < P * f.N:
        raise TruncationTooShort(f"need {P * f.N} coefficients for level {n}, have {len(f)}")
    F = to_x_basis(f.coeffs, f.modulus)
    return ZpMeasure(f.p, f.N, n, pa.fold(F, P, f.modulus), f.eff)


def restrict(mu: ZpMeasure) -> UnitMeasure:
    """Restriction to the units (level route)."""
    d = mu.data
    return UnitMeasure(mu.p, mu.N, mu.level, [mu.coeffs[u] for u in d.units], mu.eff)


def restrict_series(f: TruncatedSeries) -> TruncatedSeries:
    """Transform of the restriction to the units: ``f - phi(psi(f))``."""
    g = phi(psi(f))
    return f.truncate(len(g)) - g


def pushforward_times_p(mu: ZpMeasure) -> ZpMeasure:
    """Image under ``x -> p x``; its transform is ``phi`` of the transform."""
    P = mu.data.P
    coeffs = [0] * P
    for i, c in enumerate(mu.coeffs):
        coeffs[i * mu.p % P] += c
    return mu._like([c % mu.modulus for c in coeffs])


# ---------------------------------------------------------------------------
# moments


def moment(mu, k: int, route: str = "level") -> ApproxScalar:
    """``int x^k d mu``.

    ``level`` sums over balanced representatives in ``(-p^n/2, p^n/2)``, so
    parity is exact; the value is correct modulo ``p^min(N, n)``.  ``series``
    sums over ``0 .. p^n - 1``, the exact moment of the point-mass model.
    A ``TruncatedSeries`` argument uses ``(D^k f)(0)`` and is exact at N.
    """
    from .series import series_moment

    if isinstance(mu, TruncatedSeries):
        if k < 0:
            raise NegativePowerOnZp("negative moments need a measure on the units")
        return ApproxScalar.from_scalar(series_moment(mu, k))
    if k < 0 and isinstance(mu, ZpMeasure):
        raise NegativePowerOnZp("negative moments need a measure on the units")
    d = mu.data
    mod = mu.modulus
    reps = mu.residues()
    if k < 0:
        reps = [d.inverse[u] for u in reps]
    if route == "level":
        reps = [d.balanced[r] for r in reps]
        prec = min(mu.eff, mu.level)
    elif route == "series":
        prec = mu.eff
    else:
        raise ValueError(f"unknown route {route!r}")
    e = abs(k)
    total = sum(c * pow(r, e, mod) for r, c in zip(reps, mu.coeffs) if c)
    return ApproxScalar(mu.p, Fraction(total % mod), prec)


# ---------------------------------------------------------------------------
# group actions and algebra structure


def _unit_residue(c: "int | PadicScalar", p: int, n: int) -> int:
    v = c.value if isinstance(c, PadicScalar) else c
    if v % p == 0:
        raise NonUnit(f"{v} is not a unit")
    return v % p**n


def gamma_act(c: "int | PadicScalar", mu):
    """Action of a unit ``c``: ``c (sum a_i [x_i]) = sum c a_i [c x_i]``."""
    cr = _unit_residue(c, mu.p, mu.level)
    mod = mu.modulus
    scale, eff = (c.value, min(mu.eff, c.eff)) if isinstance(c, PadicScalar) else (c, mu.eff)
    d = mu.data
    if isinstance(mu, ZpMeasure):
        coeffs = [0] * d.P
        for i, m in enumerate(mu.coeffs):
            coeffs[i * cr % d.P] = m * scale % mod
        return mu._like(coeffs, eff)
    coeffs = [0] * d.order
    for u, m in zip(d.units, mu.coeffs):
        coeffs[d.index[u * cr % d.P]] = m * scale % mod
    return mu._like(coeffs, eff)


def pushforward_inverse(mu: UnitMeasure) -> UnitMeasure:
    """Image under ``x -> 1/x``."""
    d = mu.data
    coeffs = [0] * d.order
    for u, m in zip(d.units, mu.coeffs):
        coeffs[d.index[d.inverse[u]]] = m
    return mu._like(coeffs)


def convolve(mu: UnitMeasure, nu: UnitMeasure) -> UnitMeasure:
    """Product in the group ring of ``(Z/p^n)^x`` via its cyclic structure."""
    mu._check(nu)
    d = mu.data
    mod = mu.modulus
    a = [0] * d.order
    b = [0] * d.order
    for u, x, y in zip(d.units, mu.coeffs, nu.coeffs):
        a[d.dlog[u]] = x
        b[d.dlog[u]] = y
    prod = pa.fold(pa.mul(a, b, mod), d.order, mod)
    coeffs = [0] * d.order
    for e, x in enumerate(prod):
        coeffs[d.index[d.power[e]]] = x
    return mu._like(coeffs, min(mu.eff, nu.eff))


def convolve_additive(mu: ZpMeasure, nu: ZpMeasure) -> ZpMeasure:
    """Product in the group ring of ``Z/p^n`` (the product of transforms)."""
    mu._check(nu)
    prod = pa.fold(pa.mul(mu.coeffs, nu.coeffs, mu.modulus), mu.data.P, mu.modulus)
    return mu._like(prod, min(mu.eff, nu.eff))


def _parity_parts(mu):
    d = mu.data
    mod = mu.modulus
    half = pow(2, -1, mod)
    res = mu.residues()
    pos = {r: k for k, r in enumerate(res)}
    plus = [0] * len(res)
    minus = [0] * len(res)
    for k, r in enumerate(res):
        if r == 0:
            minus[k] = mu.coeffs[k]
            continue
        other = mu.coeffs[pos[(-r) % d.P]]
        plus[k] = (mu.coeffs[k] - other) * half % mod
        minus[k] = (mu.coeffs[k] + other) * half % mod
    return mu._like(plus), mu._like(minus)


def plus_part(mu):
    """``(mu + (-1) mu) / 2``: pushforward by ``x -> -x`` acts by ``-1``, so only odd moments survive."""
    return _parity_parts(mu)[0]


def minus_part(mu):
    """``(mu - (-1) mu) / 2``: fixed by pushforward along ``x -> -x``, so only even moments survive."""
    return _parity_parts(mu)[1]


def mult_by_x(mu: UnitMeasure, route: str = "level", length: int | None = None) -> UnitMeasure:
    """The measure ``x mu``.

    The level route scales each class by its balanced representative, which
    keeps the parity of ``mu`` exactly.  The series route applies ``D`` to the
    transform and agrees modulo ``p^min(N, n)``.
    """
    d = mu.data
    mod = mu.modulus
    if route == "level":
        coeffs = [c * d.balanced[u] % mod for u, c in zip(d.units, mu.coeffs)]
        return mu._like(coeffs, min(mu.eff, mu.level))
    if route == "series":
        L = d.P * mu.N + 1 if length is None else length
        f = big_d(series_of(mu, L))
        return restrict(measure_of_series(f, mu.level))
    raise ValueError(f"unknown route {route!r}")


# ---------------------------------------------------------------------------
# the A-map and the character decomposition


def a_map(mu: UnitMeasure) -> ZpMeasure:
    """Pushforward along ``u -> log<u> / log q``; a measure on Z_p at level ``n-1``."""
    if mu.level < 2:
        raise LevelTooSmall("the A-map needs level at least 2")
    t = a_index(mu.p, mu.level)
    Q = mu.p ** (mu.level - 1)
    coeffs = [0] * Q
    for u, c in zip(mu.data.units, mu.coeffs):
        coeffs[t[u]] += c
    return ZpMeasure(mu.p, mu.N, mu.level - 1, [c % mu.modulus for c in coeffs], mu.eff)


@dataclass
class CharacterSplit:
    """Decomposition of a unit measure into ``p - 1`` measures on Z_p.

    Component ``i`` is the image under ``[u] -> omega^i(u) [t(u)]``; as a
    series in ``S`` the generator ``[1]`` becomes ``1 + S``.
    """

    p: int
    N: int
    n: int
    components: list[ZpMeasure]
    eff: int

    def series(self, i: int, length: int | None = None) -> TruncatedSeries:
        return series_of(self.components[i], length)


def character_split(mu: UnitMeasure) -> CharacterSplit:
    if mu.level < 2:
        raise LevelTooSmall("character split needs level at least 2")
    p, N, n = mu.p, mu.N, mu.level
    mod = mu.modulus
    t = a_index(p, n)
    om = teichmuller_table(p, N)
    Q = p ** (n - 1)
    comps = [[0] * Q for _ in range(p - 1)]
    for u, c in zip(mu.data.units, mu.coeffs):
        if not c:
            continue
        w = om[u % p]
        x = c
        tu = t[u]
        for i in range(p - 1):
            comps[i][tu] += x
            x = x * w % mod
    measures = [ZpMeasure(p, N, n - 1, [x % mod for x in comp], mu.eff) for comp in comps]
    return CharacterSplit(p, N, n, measures, mu.eff)


def reassemble(cs: CharacterSplit) -> UnitMeasure:
    p, N, n = cs.p, cs.N, cs.n
    mod = p**N
    t = a_index(p, n)
    om = teichmuller_table(p, N)
    inv = pow(p - 1, -1, mod)
    d = level_data(p, n)
    coeffs = []
    for u in d.units:
        w_inv = pow(om[u % p], -1, mod)
        tu = t[u]
        total, x = 0, 1
        for i in range(p - 1):
            total += x * cs.components[i].coeffs[tu]
            x = x * w_inv % mod
        coeffs.append(total * inv % mod)
    return UnitMeasure(p, N, n, coeffs, cs.eff)


def x0_of(c: "int | PadicScalar", p: int, N: int) -> PadicScalar:
    """``log c / log q`` to ``N - 1`` digits (stored at precision N)."""
    v = c.value if isinstance(c, PadicScalar) else c
    lc = iwasawa_log(PadicScalar(p, N + 1, v, N + 1)).value // p
    lq = log_q(p, N + 1).value // p
    return PadicScalar(p, N, lc * pow(lq, -1, p**N), N)


def a_moment_from_moments(moment_fn: Callable[[int], PadicScalar], p: int, N: int) -> ApproxScalar:
    """``int log<x> / log q d mu`` for a measure on the units, from its polynomial moments.

    Uses ``log<x> = log(x^(p-1)) / (p-1)`` and the logarithm series in
    ``x^(p-1) - 1``, whose k-th term is a combination of moments of degree
    divisible by ``p - 1``.
    """
    terms = 1
    while terms + 1 - vp(terms + 1, p) < N + 2:
        terms += 1
    extra = max(vp(k, p) for k in range(1, terms + 1))
    mod = p ** (N + extra)
    raw = [moment_fn((p - 1) * j) for j in range(terms + 1)]
    eff = min(m.eff for m in raw)
    moments = [m.value for m in raw]
    total = Fraction(0)
    for k in range(1, terms + 1):
        binom = 1
        inner = 0
        for j in range(k + 1):
            inner += (-1) ** (k - j) * binom * moments[j]
            binom = binom * (k - j) // (j + 1)
        total += Fraction((-1) ** (k + 1) * (inner % mod), k)
    lq = Fraction(log_q(p, N + 1).value)
    return ApproxScalar(p, total / (p - 1) / lq, eff - extra - 1)


def divide_by_delta_difference(
    mu: UnitMeasure, c: "int | PadicScalar", a_moment: ApproxScalar | None = None
) -> UnitMeasure:
    """The ``nu`` with ``(delta_1 - delta_c) nu = mu``.

    Each character component is divided in ``Z/p^N[[S]]``.  For non-trivial
    characters the divisor has unit constant term.  The trivial component is
    divided as a power series through ``S``, starting from its lift with
    exponents in ``[0, p^(n-1))``; at level n this determines the total mass
    only modulo ``p^(n-1)``, leaving a free multiple of the norm element.  That
    multiple is fixed by the mass formula ``-a_moment log q / log c``, where
    ``a_moment`` is the integral of ``log<x>/log q`` against ``mu``.  When it is
    not supplied it is taken from the point-mass lift ``sum mu_u [u]`` with
    ``0 < u < p^n``.
    """
    p, N, n = mu.p, mu.N, mu.level
    if n < 2:
        raise LevelTooSmall("division needs level at least 2")
    cv = c.value if isinstance(c, PadicScalar) else c
    if not generates_mod_p2(cv, p):
        raise BadRegularizer(f"{cv} does not generate (Z/p^2)^x")
    if mu.mass().valuation < mu.eff:
        raise MassNotZero("measure has non-zero total mass")
    mod = mu.modulus
    cs = character_split(mu)
    x0 = x0_of(cv, p, N)
    Q = p ** (n - 1)
    L = Q * N + 1
    pw = binomial_series(x0, p, N, L)
    om_c = teichmuller_table(p, N)[cv % p]
    comps = []
    eff = min(mu.eff, pw.eff)
    for i in range(p - 1):
        lift = cs.series(i, L)
        w = pow(om_c, i, mod)
        if i:
            divisor = TruncatedSeries.constant(p, N, 1, L) - pw.scale(w)
            q = lift * divisor.inverse()
        else:
            # (1 - (1+S)^x0) / S has constant term -x0, a unit
            num = TruncatedSeries(p, N, lift.coeffs[1:], lift.eff)
            den = TruncatedSeries(p, N, [(-x) % mod for x in pw.coeffs[1:]], pw.eff)
            q = num * den.inverse()
        comps.append(_fold_series(q, n - 1))
    nu = reassemble(CharacterSplit(p, N, n, comps, eff))
    if a_moment is None:
        a_moment = lift_a_moment(mu)
    return _pin_mass(nu, a_moment, x0)


@lru_cache(maxsize=None)
def _lift_log_table(p: int, n: int, N: int) -> tuple[int, ...]:
    """``log<u> / log q`` to ``N - 1`` digits for each unit representative ``0 < u < p^n``."""
    lq = log_q(p, N + 1).value // p
    inv = pow(lq, -1, p**N)
    return tuple(
        iwasawa_log(PadicScalar(p, N + 1, u, N + 1)).value // p * inv % p**N
        for u in level_data(p, n).units
    )


def lift_a_moment(mu: UnitMeasure) -> ApproxScalar:
    """``int log<x>/log q`` against the point-mass lift of ``mu``."""
    t = _lift_log_table(mu.p, mu.level, mu.N)
    total = sum(w * x for w, x in zip(mu.coeffs, t))
    return ApproxScalar(mu.p, Fraction(total % mu.modulus), min(mu.eff, mu.N - 1))


def _fold_series(f: TruncatedSeries, n: int) -> ZpMeasure:
    F = to_x_basis(f.coeffs, f.modulus)
    return ZpMeasure(f.p, f.N, n, pa.fold(F, f.p**n, f.modulus), f.eff)


def _pin_mass(nu: UnitMeasure, a_moment: ApproxScalar, x0: PadicScalar) -> UnitMeasure:
    p, N, n = nu.p, nu.N, nu.level
    target = -a_moment / ApproxScalar.from_scalar(x0)
    gap = target - ApproxScalar.from_scalar(nu.mass())
    size = (p - 1) * p ** (n - 1)
    if gap.valuation < min(n - 1, gap.prec):
        raise MassNotZero("mass correction is not a multiple of the norm element")
    shift = gap / size
    if shift.value.denominator % p == 0:
        raise MassNotZero("mass correction is not integral")
    s = shift.value.numerator * pow(shift.value.denominator, -1, nu.modulus)
    mod = nu.modulus
    coeffs = [(x + s) % mod for x in nu.coeffs]
    return UnitMeasure(p, N, n, coeffs, min(nu.eff, shift.prec))
