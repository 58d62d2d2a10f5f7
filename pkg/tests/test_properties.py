"""Property suites; every one runs at least PROPERTY_EXAMPLES cases."""

from __future__ import annotations

import json
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from strategies import (
    PROPERTY,
    case_b_inputs,
    counted,
    positive_rationals,
    quad_pairs,
    surds,
    tensors,
    unit_elements,
)
from symdehn.dehn import complexity, merge_with_integer_weights
from symdehn.diophantine import HEX_F1, HEX_F2, _hex_member, hexagonal_eliminate, hexagonal_families
from symdehn.exactnum import QuadElem, TowerElem, quad_norm, quad_sqrt, squarefree_decompose, tower_pow
from symdehn.kummer import admissible_b, prop8_tests
from symdehn.pyramid import case_b_field_data
from symdehn.report import (
    decode_quad,
    decode_surd,
    decode_tensor,
    decode_tower,
    encode_quad,
    encode_surd,
    encode_tensor,
    encode_tower,
    parse_quad,
    format_quad,
)

HEX_MEMBERS = hexagonal_families(20, 20)


@PROPERTY
@given(quad_pairs())
@counted
def test_norm_is_multiplicative(pair):
    z, w = pair
    assert quad_norm(z * w) == quad_norm(z) * quad_norm(w)
    assert (z * w).conj() == z.conj() * w.conj()


@PROPERTY
@given(quad_pairs())
@counted
def test_quad_sqrt_is_sound(pair):
    z, alpha = pair
    root = quad_sqrt(z * z)
    assert root is not None and root * root == z * z
    other = quad_sqrt(alpha)
    if other is not None:
        assert other * other == alpha


@PROPERTY
@given(positive_rationals)
@counted
def test_squarefree_round_trip(x):
    r, m = squarefree_decompose(x)
    assert r > 0 and r * r * m == x
    assert squarefree_decompose(m) == (1, m)


@PROPERTY
@given(case_b_inputs(40))
@counted
def test_norm_identities(nab):
    n, a, b = nab
    fd = case_b_field_data(n, a, b)
    assert quad_norm(fd.alpha) == 1 and quad_norm(fd.exp_phi) == 1
    scale = 9 if n == 3 else 1
    assert quad_norm(fd.z) == scale * (b * b - a * a) ** 2


@PROPERTY
@given(st.integers(1, 20), st.integers(1, 20), st.sampled_from((HEX_F1, HEX_F2)))
@counted
def test_hexagonal_elimination_inequalities(s, d, family):
    b = 3**s + 2**d
    a = abs(3**s - 2**d)
    assert b * b - a * a == 2 ** (d + 2) * 3**s
    assert b > d + 2 and b > s
    member = _hex_member(s, d)
    if member is not None and member.family == family:
        cert = hexagonal_eliminate(member)
        assert cert.valid and (cert.s, cert.d) == (s, d)
        assert member in HEX_MEMBERS


@PROPERTY
@given(case_b_inputs(30))
@counted
def test_prop8_agrees_with_quad_sqrt(nab):
    n, a, b = nab
    fd = case_b_field_data(n, a, b)
    p8 = prop8_tests(fd.eps, fd.d_theta)
    assert p8.alpha_is_square == (quad_sqrt(fd.alpha) is not None)
    if not p8.alpha_is_square:
        assert p8.minus_alpha_is_square == (quad_sqrt(-fd.alpha) is not None)


@PROPERTY
@given(quad_pairs(), surds, tensors)
@counted
def test_json_round_trip(pair, surd, tensor):
    z, w = pair
    assert decode_quad(json.loads(json.dumps(encode_quad(z)))) == z
    assert parse_quad(format_quad(z)) == z
    assert decode_surd(json.loads(json.dumps(encode_surd(surd)))) == surd
    assert decode_tensor(json.loads(json.dumps(encode_tensor(tensor)))) == tensor
    t = TowerElem(QuadElem(5, z.x, z.y), QuadElem(5, w.x, w.y))
    assert decode_tower(json.loads(json.dumps(encode_tower(t)))) == t


# -- supporting invariants -------------------------------------------------------


@PROPERTY
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20), st.integers(0, 12), st.integers(0, 12))
@counted
def test_tower_pow_adds_exponents(x, y, u, v, j, k):
    w = TowerElem(QuadElem(5, Fraction(x, 7), Fraction(y, 3)), QuadElem(5, Fraction(u, 5), Fraction(v, 2)))
    assert tower_pow(w, j + k) == tower_pow(w, j) * tower_pow(w, k)


@PROPERTY
@given(tensors, st.integers(-4, 4).filter(bool))
@counted
def test_merge_and_integer_scaling_keep_zero_status(t, k):
    zero = t.is_zero()
    assert merge_with_integer_weights(t).is_zero() == zero
    assert (k * t).is_zero() == zero
    assert (t - t).is_canonical_zero


@PROPERTY
@given(tensors)
@counted
def test_complexity_bounds(t):
    c = complexity(t)
    assert c.exact and 0 <= c.lower <= len(t.terms)
    assert (c.lower == 0) == t.is_zero()


@PROPERTY
@given(unit_elements(), st.integers(1, 12))
@counted
def test_unit_powers_stay_on_the_circle(w, k):
    assert quad_norm(w**k) == 1


@PROPERTY
@given(case_b_inputs(64))
@counted
def test_admissible_b_rejects_multiples_of_four(nab):
    n, a, b = nab
    if b % 4 == 0:
        assert not admissible_b(n, a, b).admissible
