"""Serialization of engine results to deterministic JSON and aligned text."""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction

from .invariants import FactorizationReport
from .monoid_semiring import MonoidSemiringElement, MSFactorization, format_ms
from .numbers import format_rational
from .poly import LaurentPolynomial, Polynomial, format_laurent, format_poly
from .puiseux import PuiseuxElement, PuiseuxParams
from .semidomain import Factorization


def _coeff(c):
    return c if isinstance(c, int) else format_rational(c)


def to_jsonable(obj):
    """Convert engine objects into plain JSON values; rationals become ``"p/q"`` strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Polynomial):
        return {"coeffs": [_coeff(c) for c in obj.coeffs], "display": format_poly(obj)}
    if isinstance(obj, LaurentPolynomial):
        return {
            "shift": obj.shift,
            "coeffs": [_coeff(c) for c in obj.body.coeffs],
            "display": format_laurent(obj),
        }
    if isinstance(obj, Factorization):
        return [to_jsonable(a) for a in obj.atoms]
    if isinstance(obj, MSFactorization):
        return [to_jsonable(a) for a in obj.atoms]
    if isinstance(obj, MonoidSemiringElement):
        return {
            "terms": [[format_rational(s), c] for s, c in obj.terms],
            "display": format_ms(obj),
        }
    if isinstance(obj, PuiseuxElement):
        return {"value": format_rational(obj.value), "coeffs": list(obj.coeffs)}
    if isinstance(obj, PuiseuxParams):
        return format_rational(obj.r)
    if isinstance(obj, FactorizationReport):
        return report_dict(obj)
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_dict(rep: FactorizationReport) -> dict:
    """Field order is fixed here and is part of the output contract."""
    out = {
        "ring": rep.ring.value,
        "input": rep.element,
        "divisor_count": len(rep.divisors),
        "atoms": rep.atoms,
        "factorizations": rep.factorizations,
        "lengths": rep.lengths,
        "elasticity": rep.elasticity,
        "complete": rep.complete,
    }
    out.update(rep.extra)
    return to_jsonable(out)


def _display(v) -> str:
    if isinstance(v, dict) and "display" in v:
        return v["display"]
    if isinstance(v, dict) and "value" in v and "coeffs" in v:
        return f"{v['value']}  digits {v['coeffs']}"
    if isinstance(v, list):
        if v and all(isinstance(x, dict) and "display" in x for x in v):
            return " * ".join(f"({x['display']})" for x in v)
        if not v:
            return "[]"
        return ", ".join(_display(x) for x in v)
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _text(data: dict) -> str:
    width = max((len(k) for k in data), default=0)
    lines = []
    for key, v in data.items():
        label = key.replace("_", " ").ljust(width)
        long_list = isinstance(v, list) and v and any(isinstance(x, (list, dict)) for x in v)
        if long_list:
            lines.append(f"{label} :")
            for item in v:
                lines.append(f"{' ' * (width + 3)}{_display(item) if item != [] else '1 (empty product)'}")
        else:
            lines.append(f"{label} : {_display(v)}")
    return "\n".join(lines) + "\n"


def emit_report(report, fmt: str = "text") -> str:
    """Render a report (FactorizationReport or ordered dict) as ``json`` or ``text``."""
    data = to_jsonable(report)
    if fmt == "json":
        return json.dumps(data, ensure_ascii=False, separators=(",", ":")) + "\n"
    if fmt == "text":
        return _text(data)
    raise ValueError(f"unknown format {fmt!r}")
