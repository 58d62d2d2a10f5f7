"""JSON encoding of exact values and reports, with decoders for round-tripping.

Grammar of the text forms:

* rational:  ``p/q`` with ``q > 0`` (``p`` alone is accepted on input)
* quadratic: ``(x + y*sqrt(d))`` with x, y rationals, d squarefree
* surd:      ``r*sqrt(m)`` or ``r``

Structured forms carry the same data as integers-as-strings so that no
precision is lost through JSON.
"""

from __future__ import annotations

import json
import re
from dataclasses import fields, is_dataclass
from enum import Enum
from fractions import Fraction
from typing import Any

from . import __version__
from .cyclo import RationalAngle
from .dehn import ArgOf, Complexity, DehnTensor, DehnTerm, RationalPi, SymbolicAngle
from .exactnum import QuadElem, SurdLength, TowerElem

_RAT = r"-?\d+(?:/\d+)?"
_QUAD_RE = re.compile(rf"^\(\s*({_RAT})\s*\+\s*({_RAT})\s*\*\s*sqrt\((-?\d+)\)\s*\)$")


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    if not re.fullmatch(_RAT, text.strip()):
        raise ValueError(f"malformed rational {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_quad(z: QuadElem) -> str:
    return f"({format_rational(z.x)} + {format_rational(z.y)}*sqrt({z.d}))"


def parse_quad(text: str) -> QuadElem:
    m = _QUAD_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed quadratic value {text!r}")
    return QuadElem(int(m.group(3)), parse_rational(m.group(1)), parse_rational(m.group(2)))


def encode_quad(z: QuadElem) -> dict:
    den = z.common_denominator()
    return {
        "d": z.d,
        "num": [str(int(z.x * den)), str(int(z.y * den))],
        "den": str(den),
        "text": format_quad(z),
    }


def decode_quad(obj: dict) -> QuadElem:
    den = int(obj["den"])
    z = QuadElem(int(obj["d"]), Fraction(int(obj["num"][0]), den), Fraction(int(obj["num"][1]), den))
    if "text" in obj and parse_quad(obj["text"]) != z:
        raise ValueError("structured and text forms disagree")
    return z


def encode_surd(s: SurdLength) -> dict:
    return {"m": s.m, "r": format_rational(s.r), "text": str(s)}


def decode_surd(obj: dict) -> SurdLength:
    return SurdLength(int(obj["m"]), parse_rational(obj["r"]))


def encode_angle(a) -> dict:
    if isinstance(a, RationalPi):
        return {"kind": "rational_pi", "value": format_rational(a.angle.value), "text": str(a)}
    if isinstance(a, ArgOf):
        return {"kind": "arg", "w": encode_quad(a.w), "label": a.label, "rationality": a.rationality.value}
    if isinstance(a, SymbolicAngle):
        return {"kind": "symbolic", "name": a.name}
    raise TypeError(f"not an angle: {a!r}")


def decode_angle(obj: dict):
    kind = obj["kind"]
    if kind == "rational_pi":
        return RationalPi(RationalAngle(parse_rational(obj["value"])))
    if kind == "arg":
        return ArgOf(decode_quad(obj["w"]), obj.get("label", ""))
    if kind == "symbolic":
        return SymbolicAngle(obj["name"])
    raise ValueError(f"unknown angle kind {kind!r}")


def encode_tensor(t: DehnTensor) -> dict:
    return {
        "terms": [
            {"length": encode_surd(term.length), "multiplicity": term.multiplicity, "angle": encode_angle(term.angle)}
            for term in t.terms
        ],
        "text": str(t),
    }


def decode_tensor(obj: dict) -> DehnTensor:
    return DehnTensor.from_terms(
        DehnTerm(decode_surd(x["length"]), decode_angle(x["angle"]), int(x["multiplicity"])) for x in obj["terms"]
    )


def encode_tower(t: TowerElem) -> dict:
    return {"re": encode_quad(t.p), "im": encode_quad(t.q), "text": str(t)}


def decode_tower(obj: dict) -> TowerElem:
    return TowerElem(decode_quad(obj["re"]), decode_quad(obj["im"]))


def to_jsonable(value: Any) -> Any:
    """Generic encoder: exact types get their grammar, dataclasses become dicts."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, QuadElem):
        return encode_quad(value)
    if isinstance(value, SurdLength):
        return encode_surd(value)
    if isinstance(value, TowerElem):
        return encode_tower(value)
    if isinstance(value, DehnTensor):
        return encode_tensor(value)
    if isinstance(value, (RationalPi, ArgOf, SymbolicAngle)):
        return encode_angle(value)
    if isinstance(value, RationalAngle):
        return {"value": format_rational(value.value), "text": str(value)}
    if isinstance(value, Complexity):
        return {"lower": value.lower, "upper": value.upper}
    if is_dataclass(value):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in fields(value)}
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_jsonable(v) for v in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=lambda x: json.dumps(x, sort_keys=True))
        return items
    raise TypeError(f"cannot serialise {type(value).__name__}")


def document(command: str, inputs: dict, payload: Any) -> dict:
    return {
        "header": {"tool": "symdehn", "version": __version__},
        "command": command,
        "inputs": to_jsonable(inputs),
        "payload": to_jsonable(payload),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)
