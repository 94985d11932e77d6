"""JSON encoding of the package objects and of L-value rows."""
from __future__ import annotations

import json

from .coleman import ColemanUnit, cyclotomic_unit, unit_product
from .errors import LevelMismatch, ParseError
from .measures import UnitMeasure, ZpMeasure
from .padic import ApproxScalar, PadicContext, is_prime
from .series import TruncatedSeries


def series_to_dict(f: TruncatedSeries) -> dict:
    return {
        "kind": "series",
        "p": f.p,
        "precision": f.N,
        "eff": f.eff,
        "coeffs": [str(c) for c in f.coeffs],
    }


def measure_to_dict(mu) -> dict:
    return {
        "kind": "measure",
        "space": mu.space,
        "p": mu.p,
        "precision": mu.N,
        "eff": mu.eff,
        "level": mu.level,
        "coeffs": [str(c) for c in mu.coeffs],
    }


def unit_to_dict(eps: ColemanUnit) -> dict:
    return eps.spec()


def lvalue_row(m: int, beta: int, value: ApproxScalar) -> dict:
    """``{"m", "beta", "value", "known_mod"}`` with the value as a residue modulo ``p^prec``."""
    return {
        "m": m,
        "beta": beta,
        "value": value.residue_string(),
        "known_mod": f"{value.p}^{value.prec}",
    }


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    if isinstance(obj, TruncatedSeries):
        obj = series_to_dict(obj)
    elif isinstance(obj, (ZpMeasure, UnitMeasure)):
        obj = measure_to_dict(obj)
    elif isinstance(obj, ColemanUnit):
        obj = unit_to_dict(obj)
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _field(d: dict, key: str, where: str):
    if key not in d:
        raise ParseError(f"missing field {key!r}", where)
    return d[key]


def _int(x, where: str) -> int:
    if isinstance(x, bool):
        raise ParseError("expected an integer", where)
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise ParseError(f"expected an integer, got {x!r}", where)


def _prime(d: dict) -> int:
    p = _int(_field(d, "p", "$.p"), "$.p")
    if p < 3 or not is_prime(p):
        raise ParseError(f"{p} is not an odd prime", "$.p")
    return p


def _coeffs(d: dict) -> list[int]:
    raw = _field(d, "coeffs", "$.coeffs")
    if not isinstance(raw, list):
        raise ParseError("coeffs must be a list", "$.coeffs")
    return [_int(x, f"$.coeffs[{i}]") for i, x in enumerate(raw)]


def from_dict(d, ctx: PadicContext | None = None):
    """Inverse of the ``*_to_dict`` encoders; ``ctx`` is needed only for Coleman units."""
    if not isinstance(d, dict):
        raise ParseError("expected a JSON object", "$")
    kind = _field(d, "kind", "$.kind")
    if kind == "series":
        p = _prime(d)
        N = _int(_field(d, "precision", "$.precision"), "$.precision")
        coeffs = _coeffs(d)
        eff = _int(d.get("eff", N), "$.eff")
        if not coeffs:
            raise ParseError("a series needs at least one coefficient", "$.coeffs")
        return TruncatedSeries(p, N, coeffs, eff)
    if kind == "measure":
        p = _prime(d)
        N = _int(d.get("precision", 12), "$.precision")
        level = _int(_field(d, "level", "$.level"), "$.level")
        space = _field(d, "space", "$.space")
        cls = {"Zp": ZpMeasure, "Zp_units": UnitMeasure}.get(space)
        if cls is None:
            raise ParseError(f"unknown space {space!r}", "$.space")
        eff = _int(d.get("eff", N), "$.eff")
        try:
            return cls(p, N, level, _coeffs(d), eff)
        except LevelMismatch as exc:
            raise ParseError(str(exc), "$.coeffs") from exc
    if kind == "coleman_unit":
        if ctx is None:
            raise ParseError("a Coleman unit needs a context", "$")
        if "c" in d:
            return cyclotomic_unit(ctx, _int(d["c"], "$.c"))
        prod = _field(d, "product", "$.product")
        if not isinstance(prod, list):
            raise ParseError("product must be a list", "$.product")
        factors = []
        for i, item in enumerate(prod):
            where = f"$.product[{i}]"
            if not isinstance(item, dict):
                raise ParseError("expected an object", where)
            factors.append((_int(_field(item, "c", where + ".c"), where + ".c"),
                            _int(item.get("exp", 1), where + ".exp")))
        return unit_product(ctx, factors)
    raise ParseError(f"unknown kind {kind!r}", "$.kind")


def loads(text: str, ctx: PadicContext | None = None):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return from_dict(d, ctx)
