"""Geometry of the pyramids P_n(h): dihedral angles, exponentials and fields.

P_n(h) has its base on the n-th roots of unity and apex height h.  theta is
the dihedral angle along a base edge, phi the one along a lateral edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

from .cyclo import RationalAngle, TwoCosineSolutions, solve_two_cosine_relation
from .errors import DomainError, InternalConsistencyError
from .exactnum import QuadElem, RationalLike, as_fraction, rational_root, squarefree_decompose

SUPPORTED_N = (3, 4, 6)


@dataclass(frozen=True)
class _Trig:
    sin2: Fraction  # sin^2(pi/n)
    cos2: Fraction  # cos^2(pi/n)
    cos_2pi_n: Fraction  # cos(2pi/n)


# cos(2pi/n) is rational exactly for these three n.
TRIG = {
    3: _Trig(Fraction(3, 4), Fraction(1, 4), Fraction(-1, 2)),
    4: _Trig(Fraction(1, 2), Fraction(1, 2), Fraction(0)),
    6: _Trig(Fraction(1, 4), Fraction(3, 4), Fraction(1, 2)),
}


def _trig(n: int) -> _Trig:
    try:
        return TRIG[n]
    except KeyError:
        raise DomainError(f"n must be one of {SUPPORTED_N}, got {n}") from None


@dataclass(frozen=True)
class HeightSquared:
    h2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "h2", as_fraction(self.h2))
        if self.h2 <= 0:
            raise DomainError("the squared height must be positive")


@dataclass(frozen=True)
class CaseBRatio:
    """``v = a/b`` in lowest terms, v being sin(pi/n) / sqrt(1 + h**2)."""

    a: int
    b: int

    @property
    def v(self) -> Fraction:
        return Fraction(self.a, self.b)


@dataclass(frozen=True)
class PyramidSpec:
    n: int
    param: Union[HeightSquared, CaseBRatio]

    def __post_init__(self) -> None:
        t = _trig(self.n)
        if isinstance(self.param, CaseBRatio):
            a, b = self.param.a, self.param.b
            if a < 1 or b < 1 or gcd(a, b) != 1:
                raise DomainError(f"v = {a}/{b} must be a positive fraction in lowest terms")
            if Fraction(a * a, b * b) >= t.sin2:
                raise DomainError(
                    f"v = {a}/{b} must satisfy v^2 < sin^2(pi/{self.n}) = {t.sin2} (v at the bound is a flat pyramid)"
                )
        elif not isinstance(self.param, HeightSquared):
            raise TypeError("param must be HeightSquared or CaseBRatio")

    @classmethod
    def from_h2(cls, n: int, h2: RationalLike | str) -> PyramidSpec:
        return cls(n, HeightSquared(as_fraction(h2)))

    @classmethod
    def from_v(cls, n: int, v: RationalLike | str) -> PyramidSpec:
        v = as_fraction(v)
        return cls(n, CaseBRatio(v.numerator, v.denominator))

    @property
    def h2(self) -> Fraction:
        if isinstance(self.param, HeightSquared):
            return self.param.h2
        return v_to_height(self.n, self.param.v)

    @property
    def v(self) -> Fraction | None:
        if isinstance(self.param, CaseBRatio):
            return self.param.v
        return height_to_v(self.n, self.param.h2)

    def __str__(self) -> str:
        if isinstance(self.param, CaseBRatio):
            return f"P_{self.n}(v={self.param.a}/{self.param.b})"
        return f"P_{self.n}(h^2={self.param.h2})"


def height_to_v(n: int, h2: RationalLike) -> Fraction | None:
    """``v = sin(pi/n)/sqrt(1+h^2)`` when it is rational, else None."""
    h2 = as_fraction(h2)
    if h2 <= 0:
        raise DomainError("the squared height must be positive")
    return rational_root(_trig(n).sin2 / (1 + h2), 2)


def v_to_height(n: int, v: RationalLike) -> Fraction:
    """Inverse of :func:`height_to_v`: ``h^2 = sin^2(pi/n)/v^2 - 1``."""
    v = as_fraction(v)
    return _trig(n).sin2 / (v * v) - 1


@dataclass(frozen=True)
class DihedralCosines:
    cos_2theta: Fraction
    cos_phi: Fraction


def dihedral_cosines(n: int, h2: RationalLike) -> DihedralCosines:
    """Exact ``cos(2 theta)`` and ``cos(phi)`` of P_n(h) for rational h^2.

    ``cos 2theta`` comes from ``tan(theta) = h / cos(pi/n)`` and is checked
    against the linear relation between the two cosines.
    """
    h2 = as_fraction(h2)
    if h2 <= 0:
        raise DomainError("the squared height must be positive")
    t = _trig(n)
    cos_phi = -(h2 * t.cos_2pi_n + t.cos2) / (h2 + t.cos2)
    cos_2theta = (t.cos2 - h2) / (t.cos2 + h2)
    A, B, C = eq4_coefficients(n)
    if A * cos_2theta + B * cos_phi != C:
        raise InternalConsistencyError(f"dihedral cosines of P_{n}(h^2={h2}) violate the linear relation")
    return DihedralCosines(cos_2theta, cos_phi)


def eq4_coefficients(n: int) -> tuple[Fraction, Fraction, Fraction]:
    """(A, B, C) with ``A cos 2theta + B cos phi = C`` for every height."""
    c = _trig(n).cos_2pi_n
    return 1 - c, Fraction(2), -(1 + c)


@dataclass(frozen=True)
class PyramidFieldData:
    """Exponentials of a pyramid with rational v, all inside E = Q(i sqrt D).

    ``alpha = exp(2i theta)``, ``exp_phi = exp(i phi)`` and ``z`` the integral
    numerator of alpha.
    """

    n: int
    a: int
    b: int
    D: int
    alpha: QuadElem
    exp_phi: QuadElem
    z: QuadElem
    z_denominator: int
    # exp(i theta) = eps / sqrt(d_theta) with eps in E
    eps: QuadElem
    d_theta: int

    @property
    def d(self) -> int:
        return -self.D


def field_radicand(n: int, a: int, b: int) -> int:
    """The integer whose square root generates E_n for v = a/b."""
    return {4: b * b - 2 * a * a, 3: 3 * b * b - 4 * a * a, 6: 3 * b * b - 12 * a * a}[n]


def case_b_field_data(n: int, a: int, b: int) -> PyramidFieldData:
    _trig(n)
    if a < 1 or b < 1 or gcd(a, b) != 1:
        raise DomainError(f"v = {a}/{b} must be a positive fraction in lowest terms")
    R = field_radicand(n, a, b)
    if R <= 0:
        raise DomainError(f"v = {a}/{b} is outside the open range for n = {n} (flat or impossible pyramid)")
    s, D = squarefree_decompose(R)
    s = int(s)
    d = -D
    a2, b2 = a * a, b * b
    den = b2 - a2
    # i*sqrt(R) = s * sqrt(-D)
    if n == 4:
        exp_phi = QuadElem(d, Fraction(-a2, den), Fraction(b * s, den))
        z = QuadElem(d, Fraction(3 * a2 - b2), Fraction(2 * a * s))
        z_den = den
        eps, d_theta = QuadElem(d, Fraction(a), Fraction(s)), den
    elif n == 3:
        exp_phi = QuadElem(d, Fraction(b2 - 2 * a2, 2 * den), Fraction(b * s, 2 * den))
        z = QuadElem(d, Fraction(5 * a2 - 3 * b2), Fraction(2 * a * s))
        z_den = 3 * den
        eps, d_theta = QuadElem(d, Fraction(a), Fraction(s)), 3 * den
    else:
        exp_phi = QuadElem(d, Fraction(-b2 - 2 * a2, 2 * den), Fraction(b * s, 2 * den))
        z = QuadElem(d, Fraction(7 * a2 - b2), Fraction(2 * a * s))
        z_den = den
        eps, d_theta = QuadElem(d, Fraction(3 * a), Fraction(s)), 3 * den
    alpha = z / z_den
    if alpha == 1:
        raise DomainError(f"v = {a}/{b} gives a flat pyramid for n = {n}")
    if eps * eps / d_theta != alpha:
        raise InternalConsistencyError(f"exp(i theta)^2 != alpha for n={n}, v={a}/{b}")
    return PyramidFieldData(n, a, b, D, alpha, exp_phi, z, z_den, eps, d_theta)


def pi_product(n: int, a: int, b: int) -> QuadElem:
    """``alpha**a * exp_phi**b``; a root of unity exactly when 2a theta + b phi is in pi*Q."""
    fd = case_b_field_data(n, a, b)
    return fd.alpha**a * fd.exp_phi**b


def rational_case_solutions(n: int, reading: str = "conway_jones") -> set[tuple[RationalAngle, RationalAngle]]:
    """All (theta, phi) in pi*Q with theta in (0, pi/2), phi in (0, pi) obeying the
    linear cosine relation of P_n."""
    A, B, C = eq4_coefficients(n)
    sols: TwoCosineSolutions = solve_two_cosine_relation(A, B, C, reading=reading)
    if not sols.is_finite:
        raise InternalConsistencyError("the pyramid relation has nonzero coefficients")
    out = set()
    for two_theta, phi in sols.pairs:
        out.add((RationalAngle(two_theta.value / 2), phi))
    return out
