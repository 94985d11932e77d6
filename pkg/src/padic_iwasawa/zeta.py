"""The regularized Bernoulli measure and the Kubota-Leopoldt pseudo-measure zeta_p built from it."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BadRegularizer, DegenerateExponent, NonUnit, PoleAtOne, RegularizerPole
from .measures import (
    UnitMeasure,
    ZpMeasure,
    convolve,
    dirac,
    divide_by_delta_difference,
    generates_mod_p2,
    level_data,
    measure_of_series,
    moment,
    mult_by_x,
    plus_part,
    pushforward_inverse,
    pushforward_times_p,
    restrict,
    teichmuller_table,
)
from .padic import ApproxScalar, PadicContext, PadicScalar, ppow
from .series import TruncatedSeries, binomial_series, phi, series_moment


def _int_regularizer(c: "int | PadicScalar") -> int:
    return c.value if isinstance(c, PadicScalar) else int(c)


def bernoulli_series(p: int, N: int, c: "int | PadicScalar", length: int) -> TruncatedSeries:
    """``1/T - c/((1+T)^c - 1)`` written as ``A/B`` with ``B(0) = c`` a unit."""
    power = binomial_series(c, p, N, length + 2)
    # (1+T)^c - 1 - cT starts at T^2 and (1+T)^c - 1 at T
    num = TruncatedSeries._raw(p, N, power.coeffs[2:], power.eff)
    den = TruncatedSeries._raw(p, N, power.coeffs[1:length + 1], power.eff)
    if den.coeffs[0] % p == 0:
        raise NonUnit(f"regularizer {_int_regularizer(c)} is not a unit")
    return num * den.inverse()


@dataclass
class RegularizedBernoulli:
    """The measure ``E_{1,c}`` as a transform together with its level-n masses."""

    ctx: PadicContext
    c: int
    series: TruncatedSeries
    measure: ZpMeasure
    restricted: UnitMeasure

    def restricted_series(self, length: int) -> TruncatedSeries:
        """Transform of the restriction, ``P - phi(P)``, on a short prefix."""
        head = self.series.truncate(length)
        return head - phi(head)


@lru_cache(maxsize=None)
def e1c(ctx: PadicContext, c: int) -> RegularizedBernoulli:
    p, N, n = ctx.p, ctx.N, ctx.n
    c = _int_regularizer(c)
    if c % p == 0:
        raise BadRegularizer(f"{c} is not a unit")
    if pow(c, p - 1, p**N) == 1:
        raise BadRegularizer(f"<{c}> = 1, so the regularizing factor vanishes")
    series = bernoulli_series(p, N, c, ctx.M)
    measure = measure_of_series(series, n)
    # phi on transforms is pushforward along x -> p x on measures
    four_term = measure - pushforward_times_p(measure)
    d = level_data(p, n)
    if any(four_term.coeffs[i] for i in range(0, d.P, p)):
        raise AssertionError("E_{1,c} fails the distribution relation")
    restricted = restrict(four_term)
    if restricted != restrict(measure):
        raise AssertionError("restriction routes disagree")
    return RegularizedBernoulli(ctx, c, series, measure, restricted)


@lru_cache(maxsize=None)
def f_measure(ctx: PadicContext, c: int) -> UnitMeasure:
    """``F_c = x (j_* E^x)``, with ``j`` the inversion on the units."""
    E = e1c(ctx, c)
    F = mult_by_x(pushforward_inverse(E.restricted))
    if any(plus_part(F).coeffs):
        raise AssertionError("F_c has a non-zero plus part")
    return F


def lp_at_integer(ctx: PadicContext, m: int, c: int) -> ApproxScalar:
    """``L_p(m, omega^(1-m)) = -int x^(m-1) dF_c / (1 - c^(1-m))``."""
    if m == 1:
        raise PoleAtOne("L_p(s, 1) has a pole at s = 1")
    F = f_measure(ctx, c)
    num = moment(F, m - 1, route="level")
    den = 1 - Fraction(c) ** (1 - m)
    if den == 0:
        raise DegenerateExponent("1 - c^(1-m) vanishes")
    return -num / ApproxScalar.exact(ctx.p, den, 4 * ctx.N)


def lp_general(ctx: PadicContext, s: "int | PadicScalar", beta: int, c: int) -> ApproxScalar:
    """``L_p(1 - s, omega^beta)`` from ``int <x>^s x^(-1) omega^beta(x) dE^x / (omega^beta(c) <c>^s - 1)``.

    When the integrand is the polynomial ``x^(s-1)`` (integer ``s >= 1`` with
    ``beta = s mod p-1``) the integral is a series moment, exact at N;
    otherwise it is a level sum, correct modulo ``p^min(N, n)``.
    """
    p, N, n = ctx.p, ctx.N, ctx.n
    mod = p**N
    E = e1c(ctx, c)
    polynomial = isinstance(s, int) and (beta - s) % (p - 1) == 0
    if polynomial:
        den = ApproxScalar.exact(p, Fraction(c) ** s - 1, 4 * N)
        if s >= 1:
            num = ApproxScalar.from_scalar(series_moment(E.restricted_series(s + 1), s - 1))
        else:
            num = moment(E.restricted, s - 1, route="level")
    else:
        om = teichmuller_table(p, N)
        sc = s if isinstance(s, PadicScalar) else PadicScalar(p, N, s, N)
        cp = PadicScalar(p, N, c, N)
        den_s = PadicScalar(p, N, pow(om[c % p], beta % (p - 1), mod), N) * ppow(cp, sc) - 1
        den = ApproxScalar.from_scalar(den_s)
        d = level_data(p, n)
        total = 0
        eff = min(N, n)
        for u, w in zip(d.units, E.restricted.coeffs):
            if not w:
                continue
            up = PadicScalar(p, N, u, N)
            val = ppow(up, sc)
            eff = min(eff, val.eff)
            inv = d.balanced[d.inverse[u]]
            total += w * val.value * inv * pow(om[u % p], beta % (p - 1), mod)
        num = ApproxScalar(p, Fraction(total % mod), eff)
    if den.valuation >= den.prec:
        raise RegularizerPole("regularizing factor vanishes to working precision")
    return num / den


@dataclass(eq=False)
class PseudoZeta:
    """``zeta_p = -(delta_1 - delta_{c^-1})^-1 F_c``, represented by ``c`` and ``F_c``."""

    ctx: PadicContext
    c: int
    F: UnitMeasure


def _default_partner(p: int, c: int) -> int:
    for c1 in range(2, p * p):
        if c1 != c and generates_mod_p2(c1, p):
            return c1
    raise BadRegularizer("no second regularizer")


def regularizer_gap(ctx: PadicContext, c: int, c1: int) -> int:
    """Digits of agreement in ``(delta_1 - delta_{c1^-1}) F_c = (delta_1 - delta_{c^-1}) F_{c1}``."""
    p, N, n = ctx.p, ctx.N, ctx.n
    one = dirac(1, p, N, n)
    lhs = convolve(one - dirac(pow(c1, -1, p**n), p, N, n), f_measure(ctx, c))
    rhs = convolve(one - dirac(pow(c, -1, p**n), p, N, n), f_measure(ctx, c1))
    return lhs.agreement(rhs)


@lru_cache(maxsize=None)
def make_zeta(ctx: PadicContext, c: int, c1: int | None = None) -> PseudoZeta:
    p = ctx.p
    if not generates_mod_p2(c, p):
        raise BadRegularizer(f"{c} does not generate (Z/p^2)^x")
    F = f_measure(ctx, c)
    c1 = _default_partner(p, c) if c1 is None else c1
    if regularizer_gap(ctx, c, c1) < min(ctx.N, ctx.n) - 1:
        raise AssertionError("F_c depends on the regularizer beyond precision")
    return PseudoZeta(ctx, c, F)


def zeta_times(zeta: PseudoZeta, mu: UnitMeasure, a_moment: ApproxScalar | None = None) -> UnitMeasure:
    """``zeta_p * mu`` for a mass-zero ``mu``: solve ``mu = (delta_1 - delta_{c^-1}) nu``, return ``-F_c nu``."""
    ctx = zeta.ctx
    cinv = pow(zeta.c, -1, ctx.p**ctx.N)
    nu = divide_by_delta_difference(mu, cinv, a_moment)
    return -convolve(zeta.F, nu)


__all__ = [
    "RegularizedBernoulli",
    "PseudoZeta",
    "bernoulli_series",
    "e1c",
    "f_measure",
    "lp_at_integer",
    "lp_general",
    "make_zeta",
    "zeta_times",
    "regularizer_gap",
]
