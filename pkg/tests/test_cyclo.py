from fractions import Fraction

import pytest
import sympy

from symdehn.cyclo import (
    NIVEN_COSINES,
    CycloElem,
    RationalAngle,
    cos_as_cyclo,
    cyclotomic_poly,
    euler_phi,
    oracle_two_cosine,
    solve_two_cosine_relation,
)
from symdehn.errors import DomainError
from symdehn.pyramid import eq4_coefficients

X = sympy.Symbol("X")


@pytest.mark.parametrize("m", range(1, 65))
def test_cyclotomic_poly_matches_sympy_and_divides(m):
    coeffs = cyclotomic_poly(m)
    assert len(coeffs) - 1 == euler_phi(m)
    poly = sympy.Poly(list(reversed(coeffs)), X)
    assert poly == sympy.Poly(sympy.cyclotomic_poly(m, X), X)
    assert sympy.rem(X**m - 1, poly.as_expr(), X) == 0


@pytest.mark.parametrize("q", range(1, 25))
def test_double_angle_identity_in_cyclotomic_arithmetic(q):
    for p in range(0, q):
        if sympy.gcd(p, q) != 1:
            continue
        c = cos_as_cyclo(RationalAngle.of(p, q))
        m = 2 * q
        c2 = (CycloElem.zeta_power(m, 2 * p) + CycloElem.zeta_power(m, -2 * p)) * Fraction(1, 2)
        s2 = (CycloElem.zeta_power(m, 2 * p) + CycloElem.zeta_power(m, -2 * p) - 2) * Fraction(-1, 4)
        assert c * c * 2 == c2 + 1
        assert c * c + s2 == 1


def test_niven_values():
    for angle, value in NIVEN_COSINES.items():
        assert cos_as_cyclo(angle) == CycloElem.rational(2 * angle.q, value)
    assert not cos_as_cyclo(RationalAngle.of(1, 5)).is_rational()


def test_rational_angle_normalises_mod_one():
    assert RationalAngle.of(5, 2) == RationalAngle.of(1, 2)
    assert RationalAngle(Fraction(-1, 3)).value == Fraction(2, 3)


RELATIONS = [
    (1, -1, Fraction(1, 2)),  # Niven pairs and the pentagon relation
    (1, 1, 0),
    (2, 3, Fraction(1, 2)),
    (1, 2, -1),
    *[eq4_coefficients(n) for n in (3, 4, 6)],
]


@pytest.mark.parametrize("A,B,C", RELATIONS)
def test_solver_agrees_with_oracle(A, B, C):
    q_max = 30
    assert solve_two_cosine_relation(A, B, C).expand(q_max) == oracle_two_cosine(A, B, C, q_max)


def test_pentagon_relation_depends_on_reading():
    cj = set(solve_two_cosine_relation(1, -1, Fraction(1, 2)))
    lemma = set(solve_two_cosine_relation(1, -1, Fraction(1, 2), reading="lemma"))
    assert (RationalAngle.of(1, 5), RationalAngle.of(2, 5)) in cj - lemma
    assert (RationalAngle.of(1, 3), RationalAngle.of(1, 2)) in lemma


def test_degenerate_relations():
    sols = solve_two_cosine_relation(2, 0, 1)
    assert not sols.is_finite
    assert str(sols.families[0]) == "(x, y) = (pi/3, free)"
    with pytest.raises(DomainError):
        solve_two_cosine_relation(0, 0, 1)
    with pytest.raises(DomainError):
        oracle_two_cosine(1, 1, 0, 1)
