"""Acceptance criteria at the reference scale: p in {5, 7}, N = 12, n = 4, M = p^n N.

Each test prints one ``ACCEPTANCE <id> ... PASS|FAIL`` line covering both primes.
"""
from functools import lru_cache

import pytest

from padic_iwasawa import checks
from padic_iwasawa.coleman import cocycle_measure, restricted_unit_measure
from padic_iwasawa.measures import moment
from padic_iwasawa.zeta import lp_at_integer, make_zeta

PRIMES = (5, 7)
_CAPSYS = None


@lru_cache(maxsize=None)
def params(p: int) -> checks.Params:
    return checks.Params(p=p)


@lru_cache(maxsize=None)
def report(name: str, p: int) -> checks.Report:
    registry = {**checks.IHARA_CHECKS, **checks.LEMMA_CHECKS, **checks.LP_CHECKS}
    return registry[name](params(p))


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    global _CAPSYS
    _CAPSYS = capsys
    yield


def _announce(label: str, names, ok: bool, extra: str = "") -> None:
    lines = [f"ACCEPTANCE {label:28s} {'PASS' if ok else 'FAIL'}  [{', '.join(names)}] p={','.join(map(str, PRIMES))}"]
    if extra:
        lines.append("    " + extra)
    with _CAPSYS.disabled():
        print("\n" + "\n".join(lines))


def _run(label: str, names, extra_ok: bool = True, extra: str = "") -> None:
    failures = [f"{n}@p={p}" for n in names for p in PRIMES if not report(n, p).passed]
    ok = not failures and extra_ok
    _announce(label, names, ok, extra or ("failed: " + ", ".join(failures) if failures else ""))
    assert not failures, failures
    assert extra_ok, extra


def _min_agree(name: str) -> str:
    return ", ".join(
        f"p={p}: min agree {min(i.agree_exp for i in report(name, p).items)} / req {report(name, p).items[0].required}"
        for p in PRIMES
    )


def test_1_bernoulli_interpolation():
    _run("1 bernoulli-interpolation", ["bernoulli-interpolation"],
         extra=_min_agree("bernoulli-interpolation"))


def test_2_f_mass_log():
    _run("2 f-mass-log", ["f-mass-log"], extra=_min_agree("f-mass-log"))


def _even_m_exact_zero(p: int) -> bool:
    prm = params(p)
    zc, zc2 = prm.zeta_regularizers()
    z = make_zeta(prm.ctx, zc, zc2)
    for eps in prm.unit_objects():
        F = cocycle_measure(eps, z)
        mu = restricted_unit_measure(eps)
        for m in range(2, prm.mmax + 1, 2):
            lhs = moment(F, m - 1, route="level")
            rhs = lp_at_integer(prm.ctx, m, prm.c) * moment(mu, m - 1, route="level")
            if lhs.value != 0 or rhs.value != 0:
                return False
    return True


def test_3_ihara_suite():
    names = ["ihara-moments", "cocycle-factorization", "ihara-coates-wiles"]
    zero = all(_even_m_exact_zero(p) for p in PRIMES)
    _run("3 ihara-suite", names, zero, _min_agree("ihara-moments") + f"; even m exactly 0: {zero}")


def test_4_residue_mass():
    _run("4 residue-mass", ["residue-mass"], extra=_min_agree("residue-mass"))


def test_5_operator_coherence():
    _run("5 operator-coherence", [
        "psi-phi-identity",
        "col-psi-invariant",
        "coleman-norm-fixed",
        "restricted-mass-zero",
        "cw-moment-identity",
    ])


def test_6_regularizer_independence():
    _run("6 regularizer-independence", ["regularizer-independence", "zeta-regularizer-independence"])


def test_7_structure_maps():
    trials = {p: params(p).trials for p in PRIMES}
    assert all(t >= 50 for t in trials.values())
    _run("7 structure-maps", ["moment-multiplicativity", "gamma-action", "parity-projectors"])


def test_8_irregular_pairs():
    from padic_iwasawa.bernoulli import irregular_pairs

    rep = checks.check_irregular_pairs([5, 7, 37])
    exact = irregular_pairs(37) == [(37, 32)] and irregular_pairs(5) == [] and irregular_pairs(7) == []
    ok = rep.passed and exact
    _announce("8 irregular-pairs", ["irregular-pairs"], ok, f"37 -> {irregular_pairs(37)}; 5, 7 -> []")
    assert ok


@pytest.mark.parametrize("p", PRIMES)
def test_reference_parameters(p):
    prm = params(p)
    assert (prm.N, prm.n, prm.c, prm.c2) == (12, 4, 2, 3)
    assert prm.ctx.M == p**4 * 12
    assert [eps.label() for eps in prm.unit_objects()] == ["u2", "u3", "u2*u3"]
