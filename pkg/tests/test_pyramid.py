import math
from fractions import Fraction

import pytest

from strategies import case_b_pairs
from symdehn.errors import DomainError
from symdehn.exactnum import QuadElem, quad_norm
from symdehn.pyramid import (
    PyramidSpec,
    case_b_field_data,
    dihedral_cosines,
    eq4_coefficients,
    height_to_v,
    pi_product,
    rational_case_solutions,
    v_to_height,
)
from symdehn.cyclo import RationalAngle


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def _dihedral(p, q, r, s):
    """Interior angle along edge pq between faces pqr and pqs."""
    e = _sub(q, p)
    n1, n2 = _cross(e, _sub(r, p)), _cross(e, _sub(s, p))
    dot = sum(a * b for a, b in zip(n1, n2))
    return math.acos(dot / math.sqrt(sum(a * a for a in n1) * sum(b * b for b in n2)))


def _float_angles(n, h2):
    """(theta, phi) from vertex coordinates, independent of the exact formulas."""
    h = math.sqrt(h2)
    base = [[math.cos(2 * math.pi * k / n), math.sin(2 * math.pi * k / n), 0.0] for k in range(n)]
    apex = [0.0, 0.0, h]
    centre = [0.0, 0.0, 0.0]
    theta = _dihedral(base[0], base[1], apex, centre)
    phi = _dihedral(apex, base[1], base[0], base[2])
    return theta, phi


@pytest.mark.parametrize("n", (3, 4, 6))
@pytest.mark.parametrize("h2", [Fraction(1, 2), Fraction(1), Fraction(2), Fraction(7, 3), Fraction(1, 9), Fraction(40)])
def test_dihedral_cosines_match_coordinates(n, h2):
    cos = dihedral_cosines(n, h2)
    theta, phi = _float_angles(n, float(h2))
    assert float(cos.cos_2theta) == pytest.approx(math.cos(2 * theta), abs=1e-12)
    assert float(cos.cos_phi) == pytest.approx(math.cos(phi), abs=1e-12)
    A, B, C = eq4_coefficients(n)
    assert A * cos.cos_2theta + B * cos.cos_phi == C


def test_eq4_coefficients():
    assert eq4_coefficients(4) == (1, 2, -1)
    assert eq4_coefficients(3) == (Fraction(3, 2), 2, Fraction(-1, 2))
    assert eq4_coefficients(6) == (Fraction(1, 2), 2, Fraction(-3, 2))


def test_height_and_v_round_trip():
    for n in (3, 4, 6):
        for a, b in case_b_pairs(n, 20):
            h2 = v_to_height(n, Fraction(a, b))
            assert height_to_v(n, h2) == Fraction(a, b)
    assert height_to_v(4, 4) is None
    assert PyramidSpec.from_v(4, Fraction(1, 2)).h2 == 1


@pytest.mark.parametrize("n", (3, 4, 6))
def test_field_data_identities_for_all_b_up_to_40(n):
    scale = 9 if n == 3 else 1
    for a, b in case_b_pairs(n, 40):
        fd = case_b_field_data(n, a, b)
        assert quad_norm(fd.alpha) == 1 and quad_norm(fd.exp_phi) == 1
        assert quad_norm(fd.z) == scale * (b * b - a * a) ** 2
        cos = dihedral_cosines(n, v_to_height(n, Fraction(a, b)))
        assert fd.alpha.x == cos.cos_2theta
        assert fd.exp_phi.x == cos.cos_phi


def test_field_data_against_float_geometry():
    fd = case_b_field_data(4, 1, 3)
    theta, phi = _float_angles(4, float(v_to_height(4, Fraction(1, 3))))
    D = fd.D
    assert float(fd.alpha.y) * math.sqrt(D) == pytest.approx(math.sin(2 * theta), abs=1e-12)
    assert float(fd.exp_phi.y) * math.sqrt(D) == pytest.approx(math.sin(phi), abs=1e-12)


def test_regular_values():
    f4, f3 = case_b_field_data(4, 1, 2), case_b_field_data(3, 1, 2)
    assert f4.alpha == f4.exp_phi == QuadElem(-2, Fraction(-1, 3), Fraction(2, 3))
    assert f3.exp_phi == QuadElem(-2, Fraction(1, 3), Fraction(2, 3))
    assert f3.exp_phi**2 == f3.alpha


def test_pi_products():
    assert pi_product(4, 1, 3) == QuadElem(-7, Fraction(87, 256), Fraction(91, 256))
    assert pi_product(6, 1, 3) == QuadElem(-15, Fraction(-1673, 2048), Fraction(305, 2048))


def test_domain_errors():
    with pytest.raises(DomainError):
        PyramidSpec.from_v(6, Fraction(1, 2))
    with pytest.raises(DomainError):
        PyramidSpec.from_h2(5, 1)
    with pytest.raises(DomainError):
        PyramidSpec.from_h2(4, 0)
    with pytest.raises(DomainError):
        case_b_field_data(4, 2, 4)


def test_rational_case_solutions():
    assert rational_case_solutions(4) == {(RationalAngle.of(1, 4), RationalAngle.of(2, 3))}
    assert rational_case_solutions(3) == set()
    assert rational_case_solutions(6) == set()
