"""Regular pyramids (all edges equal), their gluing relations and the pentagonal check."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dehn import ArgOf, DehnTensor, dehn_invariant, merge_with_integer_weights, scale
from .errors import InternalConsistencyError
from .exactnum import QuadElem, SurdLength, TowerElem, rational_root, tower_pow
from .pyramid import TRIG, PyramidSpec, case_b_field_data

SQRT5 = QuadElem(5, 0, 1)


def _q5(x, y=0) -> QuadElem:
    return QuadElem(5, Fraction(x), Fraction(y))


# cos(pi/5) = (1 + sqrt5)/4 and cos(2pi/5) = (sqrt5 - 1)/4
COS_PI_5 = _q5(Fraction(1, 4), Fraction(1, 4))
COS_2PI_5 = _q5(Fraction(-1, 4), Fraction(1, 4))
SIN2_PI_5 = 1 - COS_PI_5 * COS_PI_5


@dataclass(frozen=True)
class RegularPyramid:
    """P_n(h) with every edge of length ``c = sqrt(1 + h^2) = 2 sin(pi/n)``."""

    n: int
    h_squared: QuadElem
    edge_squared: QuadElem
    edge: SurdLength | None  # None when c is not a rational surd (n = 5)

    @property
    def spec(self) -> PyramidSpec | None:
        if self.h_squared.y != 0:
            return None
        return PyramidSpec.from_h2(self.n, self.h_squared.x)


def _sin2(n: int) -> QuadElem:
    return SIN2_PI_5 if n == 5 else _q5(TRIG[n].sin2)


def _is_positive(z: QuadElem) -> bool:
    """Sign of ``x + y sqrt5`` decided exactly."""
    if z.x >= 0 and z.y >= 0:
        return z != 0
    if z.x <= 0 and z.y <= 0:
        return False
    return (z.x * z.x > 5 * z.y * z.y) == (z.x > 0)


def regular_pyramids() -> tuple[RegularPyramid, ...]:
    """v = 1/2 needs 1/4 < sin^2(pi/n), leaving n in {3, 4, 5}; n = 6 sits on the bound."""
    out = []
    for n in (3, 4, 5, 6):
        sin2 = _sin2(n)
        if not _is_positive(sin2 - Fraction(1, 4)):
            continue
        c2 = 4 * sin2
        h2 = c2 - 1
        edge = SurdLength.sqrt(c2.x) if c2.y == 0 else None
        out.append(RegularPyramid(n, h2, c2, edge))
    pyr = tuple(out)
    for p in pyr:
        if 1 + p.h_squared != 4 * _sin2(p.n):
            raise InternalConsistencyError(f"edge identity fails for n = {p.n}")
    return pyr


# -- gluing relations -------------------------------------------------------------


@dataclass(frozen=True)
class GluingRecord:
    exp_phi3: QuadElem
    exp_phi4: QuadElem
    phi_product: QuadElem
    coincidence_4: bool  # exp(2i theta_4) == exp(i phi_4)
    coincidence_3: bool  # exp(i theta_3) == exp(i phi_3)
    dehn_p4: DehnTensor
    dehn_p3: DehnTensor
    display_p4_matches: bool  # Dehn(P_4(1)) == -6 sqrt2 (x) phi_3
    display_p3_matches: bool  # Dehn(P_3(sqrt2)) == 6 sqrt3 (x) phi_3
    relation_1: DehnTensor  # sqrt3 Dehn(P_4(1)) + sqrt2 Dehn(P_3(sqrt2))
    relation_2: DehnTensor  # 3 sqrt2 Dehn(P_4(1)) + 2 sqrt3 Dehn(P_3(sqrt2))
    crystal: DehnTensor  # 3 Dehn(K') + 2 Dehn(T'), K' = sqrt2*P_4(1), T' = sqrt3*P_3(sqrt2)
    crystal_edges: tuple[SurdLength, SurdLength]

    @property
    def passed(self) -> bool:
        return (
            self.phi_product == -1
            and self.coincidence_4
            and self.coincidence_3
            and self.display_p4_matches
            and self.display_p3_matches
            and self.relation_1.is_canonical_zero
            and self.relation_2.is_canonical_zero
            and self.crystal.is_canonical_zero
            and self.crystal_edges == (SurdLength(1, 2), SurdLength(1, 3))
        )


def verify_gluing_relations() -> GluingRecord:
    """Derive the v = 1/2 pyramids from the field data and check the two gluing relations."""
    p4 = PyramidSpec.from_v(4, Fraction(1, 2))
    p3 = PyramidSpec.from_v(3, Fraction(1, 2))
    if p4.h2 != 1 or p3.h2 != 2:
        raise InternalConsistencyError("v = 1/2 does not give the regular square and triangular pyramids")
    f4 = case_b_field_data(4, 1, 2)
    f3 = case_b_field_data(3, 1, 2)
    root = rational_root(f3.d_theta, 2)
    exp_theta3 = f3.eps / root if root is not None else None
    phi3 = ArgOf(f3.exp_phi**2, "phi_3")
    d4, d3 = dehn_invariant(p4), dehn_invariant(p3)
    shown_p4 = DehnTensor.from_terms([(SurdLength.of(6, 2), phi3, -1)])
    shown_p3 = DehnTensor.from_terms([(SurdLength.of(6, 3), phi3, 1)])
    s2, s3 = SurdLength.sqrt(2), SurdLength.sqrt(3)
    rel1 = merge_with_integer_weights(scale(d4, s3) + scale(d3, s2))
    rel2 = merge_with_integer_weights(scale(d4, 3 * s2) + scale(d3, 2 * s3))
    k_prime, t_prime = scale(d4, s2), scale(d3, s3)
    crystal = merge_with_integer_weights(3 * k_prime + 2 * t_prime)
    rec = GluingRecord(
        exp_phi3=f3.exp_phi,
        exp_phi4=f4.exp_phi,
        phi_product=f3.exp_phi * f4.exp_phi,
        coincidence_4=f4.alpha == f4.exp_phi,
        coincidence_3=exp_theta3 == f3.exp_phi,
        dehn_p4=d4,
        dehn_p3=d3,
        display_p4_matches=d4.equivalent(shown_p4),
        display_p3_matches=d3.equivalent(shown_p3),
        relation_1=rel1,
        relation_2=rel2,
        crystal=crystal,
        crystal_edges=(SurdLength.sqrt(1 + p4.h2) * s2, SurdLength.sqrt(1 + p3.h2) * s3),
    )
    if not rec.passed:
        raise InternalConsistencyError(f"gluing relations fail: {rec}")
    return rec


# -- the pentagonal pyramid ------------------------------------------------------


@dataclass(frozen=True)
class P5Report:
    cos_phi: QuadElem
    cos2_theta: QuadElem
    exp_phi: TowerElem
    exp_theta_numerator: TowerElem  # exp(i theta) = this / sqrt(6 (5 - sqrt5))
    z_numerator: TowerElem  # exp(i (phi + theta)) = this / (3 sqrt(6 (5 - sqrt5)))
    displayed_product_matches: bool
    numerator_norm: QuadElem
    W: TowerElem  # Z^2
    W_rel_norm: QuadElem
    W60: TowerElem
    W60_is_one: bool
    W4_is_one: bool


def p5_report() -> P5Report:
    """Exact check that Z = exp(i (phi + theta)) of the regular pentagonal pyramid has ``Z^60 != +-1``.

    Works with ``W = Z^2``, which lies in Q(sqrt5)(i) although Z does not.
    """
    cc, c2 = COS_PI_5 * COS_PI_5, COS_2PI_5
    h2 = 4 * SIN2_PI_5 - 1
    if h2 != _q5(Fraction(3, 2), Fraction(-1, 2)):
        raise InternalConsistencyError("h^2 of the regular pentagonal pyramid is not (3 - sqrt5)/2")
    cos_phi = -(h2 * c2 + cc) / (h2 + cc)
    cos2_theta = cc / (cc + h2)
    if cos_phi != _q5(0, Fraction(-1, 3)):
        raise InternalConsistencyError(f"cos(phi) = {cos_phi}, expected -sqrt5/3")
    exp_phi = TowerElem(_q5(0, Fraction(-1, 3)), _q5(Fraction(2, 3)))
    if exp_phi.p != cos_phi or exp_phi.rel_norm() != 1:
        raise InternalConsistencyError("displayed exp(i phi) is inconsistent with cos(phi)")
    six_c = 6 * (5 - SQRT5)
    theta_num = TowerElem(_q5(1, 1), _q5(-2, 2))
    if theta_num.p * theta_num.p / six_c != cos2_theta or theta_num.rel_norm() != six_c:
        raise InternalConsistencyError("displayed exp(i theta) is inconsistent with cos^2(theta)")
    z_num = exp_phi * theta_num * 3
    shown = TowerElem(_q5(-1, -5), _q5(-8, 4))
    norm = z_num.rel_norm()
    if norm != 54 * (5 - SQRT5):
        raise InternalConsistencyError(f"|numerator|^2 = {norm}, expected 54 (5 - sqrt5)")
    W = z_num * z_num / norm
    if W.rel_norm() != 1:
        raise InternalConsistencyError("W does not have unit modulus")
    W60 = tower_pow(W, 60)
    one = TowerElem.one()
    return P5Report(
        cos_phi=cos_phi,
        cos2_theta=cos2_theta,
        exp_phi=exp_phi,
        exp_theta_numerator=theta_num,
        z_numerator=z_num,
        displayed_product_matches=z_num == shown,
        numerator_norm=norm,
        W=W,
        W_rel_norm=W.rel_norm(),
        W60=W60,
        W60_is_one=W60 == one,
        W4_is_one=tower_pow(W, 4) == one,
    )


def p5_check() -> bool:
    """Whether ``W^60 == 1``; False confirms that P_5(1/phi) has nonzero Dehn invariant."""
    return p5_report().W60_is_one
