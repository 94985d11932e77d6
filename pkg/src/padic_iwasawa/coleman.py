"""Coleman power series of cyclotomic units and the measures they produce."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DegenerateExponent, NonUnit, NotInImage
from .measures import (
    UnitMeasure,
    a_map,
    a_moment_from_moments,
    measure_of_series,
    moment,
    restrict,
)
from .padic import ApproxScalar, PadicContext, PadicScalar, log_q
from .series import TruncatedSeries, binomial_series, delta, phi, psi, series_moment
from .zeta import PseudoZeta, zeta_times


@dataclass(frozen=True)
class ColemanUnit:
    """A norm-coherent unit through its Coleman series.

    ``factors`` lists ``(c, exponent)`` pairs: the unit is the product of the
    cyclotomic units attached to each ``c``, raised to the exponents.
    """

    ctx: PadicContext
    factors: tuple[tuple[int, int], ...]
    f: TruncatedSeries = field(compare=False, hash=False, repr=False)

    def spec(self) -> dict:
        if len(self.factors) == 1 and self.factors[0][1] == 1:
            return {"kind": "coleman_unit", "c": str(self.factors[0][0])}
        return {
            "kind": "coleman_unit",
            "product": [{"c": str(c), "exp": e} for c, e in self.factors],
        }

    def label(self) -> str:
        return "*".join(f"u{c}" if e == 1 else f"u{c}^{e}" for c, e in self.factors) or "1"


def _series_length(ctx: PadicContext) -> int:
    # one guard term so that Delta f keeps the full length M
    return ctx.M + 1


@lru_cache(maxsize=None)
def cyclotomic_series(ctx: PadicContext, c: int) -> TruncatedSeries:
    """``T / ((1+T)^c - 1)``, with ``f(0) = 1/c``."""
    p, N = ctx.p, ctx.N
    if c % p == 0:
        raise NonUnit(f"{c} is not a unit")
    if (c - 1) % p**N == 0:
        raise DegenerateExponent("c = 1 gives the trivial unit")
    L = _series_length(ctx)
    power = binomial_series(c, p, N, L + 1)
    den = TruncatedSeries._raw(p, N, power.coeffs[1:], power.eff)
    return den.inverse()


def cyclotomic_unit(ctx: PadicContext, c: "int | PadicScalar") -> ColemanUnit:
    cv = c.value if isinstance(c, PadicScalar) else int(c)
    return ColemanUnit(ctx, ((cv, 1),), cyclotomic_series(ctx, cv))


def unit_product(ctx: PadicContext, factors) -> ColemanUnit:
    """Product of cyclotomic units with integer exponents; ``[]`` is the trivial unit."""
    factors = tuple((int(c), int(e)) for c, e in factors if e)
    f = TruncatedSeries.constant(ctx.p, ctx.N, 1, _series_length(ctx))
    for c, e in factors:
        f = f * cyclotomic_series(ctx, c) ** e
    return ColemanUnit(ctx, factors, f)


def multiply(a: ColemanUnit, b: ColemanUnit) -> ColemanUnit:
    merged: dict[int, int] = {}
    for c, e in a.factors + b.factors:
        merged[c] = merged.get(c, 0) + e
    return ColemanUnit(a.ctx, tuple((c, e) for c, e in merged.items() if e), a.f * b.f)


@lru_cache(maxsize=None)
def _col(eps: ColemanUnit) -> TruncatedSeries:
    return delta(eps.f)


def col(eps: ColemanUnit, check: bool = True) -> TruncatedSeries:
    """``Delta f``, which is fixed by psi."""
    g = _col(eps)
    if check:
        back = psi(g)
        if back.agreement(g) < g.eff:
            raise NotInImage("Delta f is not psi-invariant")
    return g


def restricted_series(eps: ColemanUnit, length: int) -> TruncatedSeries:
    """Transform of ``mu^x`` on a short prefix: ``Delta f - phi(Delta f)``."""
    head = _col(eps).truncate(length)
    return head - phi(head)


def cw(eps: ColemanUnit, k: int) -> PadicScalar:
    """Coates-Wiles number ``CW_k``, checked against the restricted measure."""
    if k < 1:
        raise ValueError("CW_k needs k >= 1")
    value = series_moment(_col(eps), k - 1)
    p = eps.ctx.p
    restricted = series_moment(restricted_series(eps, k + 1), k - 1)
    if restricted.agreement(value * (1 - p ** (k - 1))) < min(value.eff, restricted.eff):
        raise AssertionError("Coates-Wiles routes disagree")
    return value


@lru_cache(maxsize=None)
def restricted_unit_measure(eps: ColemanUnit) -> UnitMeasure:
    """``mu^x``: the restriction to the units of the measure of ``Delta f``."""
    return restrict(measure_of_series(_col(eps), eps.ctx.n))


@lru_cache(maxsize=None)
def unit_a_moment(eps: ColemanUnit) -> ApproxScalar:
    """``int log<x>/log q d mu^x`` to high precision, from the exact series moments."""
    ctx = eps.ctx
    terms = 4 * ctx.N + 8
    head = restricted_series(eps, (ctx.p - 1) * terms + 2)
    return a_moment_from_moments(lambda k: series_moment(head, k), ctx.p, ctx.N)


@lru_cache(maxsize=None)
def cocycle_measure(eps: ColemanUnit, zeta: PseudoZeta) -> UnitMeasure:
    """The cocycle measure ``F_c nu`` where ``mu^x = (delta_1 - delta_{c^-1}) nu``.

    This equals ``-zeta_p mu^x``: the product with ``zeta_p`` carries the
    opposite sign.
    """
    mu = restricted_unit_measure(eps)
    return -zeta_times(zeta, mu, unit_a_moment(eps))


def kappa_p(eps: ColemanUnit) -> ApproxScalar:
    """``(1 - 1/p)(-log q) int x dA(mu^x)`` with the A-map moment taken at level n-1."""
    ctx = eps.ctx
    p = ctx.p
    a1 = moment(a_map(restricted_unit_measure(eps)), 1, route="level")
    lq = ApproxScalar.from_scalar(log_q(p, ctx.N))
    return (1 - ApproxScalar.exact(p, 1) / p) * (-lq) * a1
