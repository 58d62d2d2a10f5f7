import json
from fractions import Fraction

import pytest

from symdehn.dehn import ArgOf, SymbolicAngle, dehn_invariant, triviality_verdict
from symdehn.exactnum import QuadElem
from symdehn.pyramid import PyramidSpec
from symdehn.report import (
    decode_angle,
    decode_quad,
    decode_tensor,
    document,
    dumps,
    encode_angle,
    encode_quad,
    encode_tensor,
    format_quad,
    format_rational,
    parse_quad,
    parse_rational,
)


def test_rational_grammar():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(3) == "3/1"
    assert parse_rational("7") == 7
    for bad in ("1/0", "1.5", "a/b", "1//2"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_quad_grammar():
    z = QuadElem(-7, Fraction(87, 256), Fraction(91, 256))
    assert format_quad(z) == "(87/256 + 91/256*sqrt(-7))"
    assert parse_quad(format_quad(z)) == z
    assert encode_quad(z) == {"d": -7, "num": ["87", "91"], "den": "256", "text": "(87/256 + 91/256*sqrt(-7))"}
    with pytest.raises(ValueError):
        parse_quad("87/256 + 91/256*i")


def test_decode_detects_tampering():
    obj = encode_quad(QuadElem(-7, 1, 1))
    obj["num"][0] = "2"
    with pytest.raises(ValueError):
        decode_quad(obj)


def test_angle_and_tensor_round_trip():
    for a in (ArgOf(QuadElem(-7, Fraction(-3, 4), Fraction(1, 4)), "t"), SymbolicAngle("x")):
        assert decode_angle(encode_angle(a)) == a
    t = dehn_invariant(PyramidSpec.from_h2(4, 4))
    assert decode_tensor(json.loads(json.dumps(encode_tensor(t)))) == t


def test_documents_are_stable():
    rep = triviality_verdict(PyramidSpec.from_v(4, Fraction(1, 3)), verbose=True)
    a = dumps(document("verdict", {"n": 4}, rep))
    b = dumps(document("verdict", {"n": 4}, triviality_verdict(PyramidSpec.from_v(4, Fraction(1, 3)), verbose=True)))
    assert a == b
    doc = json.loads(a)
    assert doc["header"] == {"tool": "symdehn", "version": "0.1.0"}
    assert doc["payload"]["verdict"] == "nontrivial"
    assert doc["payload"]["chain"][-1]["value"]["text"] == "(87/256 + 91/256*sqrt(-7))"
