from fractions import Fraction

import pytest

from symdehn.errors import DomainError, FieldMismatchError
from symdehn.exactnum import (
    QuadElem,
    SurdLength,
    TowerElem,
    as_fraction,
    iroot,
    quad_norm,
    quad_sqrt,
    rational_root,
    split_prime_power,
    squarefree_decompose,
    squarefree_part,
    tower_pow,
)


def test_as_fraction_accepts_strings_and_rejects_bools():
    assert as_fraction("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_fraction(True)


@pytest.mark.parametrize("n,k,root,exact", [(0, 3, 0, True), (27, 3, 3, True), (28, 3, 3, False), (2**200, 8, 2**25, True)])
def test_iroot(n, k, root, exact):
    assert iroot(n, k) == (root, exact)


def test_rational_root():
    assert rational_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_root(Fraction(-8, 27), 3) == Fraction(-2, 3)
    assert rational_root(-4, 2) is None
    assert rational_root(Fraction(2, 9), 2) is None


def test_split_prime_power():
    assert split_prime_power(96, 2) == (5, 3)
    with pytest.raises(DomainError):
        split_prime_power(0, 3)


def test_squarefree_decompose():
    assert squarefree_decompose(Fraction(8, 3)) == (Fraction(2, 3), 6)
    assert squarefree_decompose(12) == (2, 3)
    assert squarefree_part(-50) == -2
    with pytest.raises(DomainError):
        squarefree_decompose(0)


def test_quad_arithmetic():
    z = QuadElem(-7, Fraction(-3, 4), Fraction(1, 4))
    assert quad_norm(z) == 1
    assert z * z.conj() == 1
    assert z * z.inverse() == 1
    assert (z / z) == 1
    assert z**-2 == (z * z).inverse()
    assert 1 - z == QuadElem(-7, Fraction(7, 4), Fraction(-1, 4))


def test_quad_fields_do_not_mix():
    with pytest.raises(FieldMismatchError):
        QuadElem(-7, 1, 1) + QuadElem(-2, 1, 1)


def test_rational_elements_compare_across_fields():
    assert QuadElem(-7, 3) == QuadElem(-2, 3) == 3


def test_quad_sqrt():
    # (1 + 2i sqrt2)^2 = -7 + 4i sqrt2
    assert quad_sqrt(QuadElem(-2, -7, 4)) == QuadElem(-2, 1, 2)
    assert quad_sqrt(QuadElem(-2, -2)) == QuadElem(-2, 0, 1)
    assert quad_sqrt(QuadElem(-7, Fraction(-3, 4), Fraction(1, 4))) is None


def test_surd_lengths():
    assert SurdLength.of(6, 2) == SurdLength(2, 6)
    assert SurdLength.sqrt(8) == SurdLength(2, 2)
    assert SurdLength.sqrt(2) * SurdLength.sqrt(6) == SurdLength(3, 2)
    assert SurdLength.sqrt(8).ratio(SurdLength.sqrt(2)) == 2
    assert SurdLength.sqrt(3).ratio(SurdLength.sqrt(2)) is None
    assert str(SurdLength.of(Fraction(3, 2), 5)) == "3/2*sqrt(5)"
    with pytest.raises(DomainError):
        SurdLength(4, 1)


def test_tower_elements():
    i = TowerElem.i()
    assert i * i == TowerElem.one() * -1
    assert tower_pow(i, 4) == TowerElem.one()
    w = TowerElem(QuadElem(5, Fraction(3, 5)), QuadElem(5, Fraction(4, 5)))
    assert w.rel_norm() == 1
    assert tower_pow(w, 3) * tower_pow(w.conj(), 3) == TowerElem.one()
    with pytest.raises(DomainError):
        tower_pow(w, -1)
