"""Galois-side predicates for the Kummer extensions K_N(alpha)/E.

E is an imaginary quadratic field Q(i sqrt D) throughout; roots of unity,
square classes and fourth powers in E are decided exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd

import sympy
from sympy import factorint

from .errors import DomainError, InternalConsistencyError
from .exactnum import QuadElem, RationalLike, as_fraction, is_rational_square, quad_sqrt, rational_root
from .pyramid import PyramidFieldData, case_b_field_data


@dataclass(frozen=True)
class UnityContent:
    """Roots of unity of Q(i sqrt D) (D > 0); real fields carry only +-1."""

    D: int
    group_order: int


def roots_of_unity_in(D: int) -> UnityContent:
    """Q(i) holds mu_4, Q(i sqrt 3) holds mu_6, every other quadratic field only +-1."""
    if D == 0:
        raise DomainError("D must be nonzero")
    return UnityContent(D, {1: 4, 3: 6}.get(D, 2))


def unity_order(elem: QuadElem) -> int:
    return roots_of_unity_in(-elem.d).group_order


def is_root_of_unity(z: QuadElem) -> bool:
    """Every root of unity in the field of ``z`` has order dividing 2, 4 or 6."""
    return z ** unity_order(z) == 1


# -- powers -----------------------------------------------------------------


@dataclass(frozen=True)
class PowerTestResult:
    is_power: bool
    witness: QuadElem | None = None


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """Rational roots of the polynomial with the given coefficients (highest first)."""
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], x, domain="QQ")
    return [Fraction(int(r.p), int(r.q)) for r in poly.ground_roots()]


def _prime_roots(alpha: QuadElem, p: int) -> list[QuadElem]:
    """All ``lam`` in the field of alpha with ``lam**p == alpha``, p prime."""
    if alpha == 0:
        return [alpha]
    if p == 2:
        r = quad_sqrt(alpha)
        return [] if r is None else [r, -r]
    n = rational_root(alpha.norm(), p)
    if n is None:
        return []
    # lam = u + v sqrt d with v^2 d = u^2 - n; Re(lam^p) is a polynomial in u
    # sum_{k even} C(p,k) u^(p-k) (u^2 - n)^(k/2)
    poly = [Fraction(0)] * (p + 1)  # lowest degree first
    for k in range(0, p + 1, 2):
        binom_u2_n = [Fraction(0)] * (k + 1)
        for j in range(k // 2 + 1):
            binom_u2_n[2 * j] = Fraction(comb(k // 2, j)) * (-n) ** (k // 2 - j)
        for i, c in enumerate(binom_u2_n):
            poly[i + p - k] += comb(p, k) * c
    poly[0] -= alpha.x
    roots = []
    for u in _rational_roots(poly[::-1]):
        v2 = (u * u - n) / alpha.d
        v = rational_root(v2, 2)
        if v is None:
            continue
        for cand in {QuadElem(alpha.d, u, v), QuadElem(alpha.d, u, -v)}:
            if cand**p == alpha:
                roots.append(cand)
    return roots


def nth_power_test(alpha: QuadElem, N: int) -> PowerTestResult:
    """Decide whether alpha is an N-th power in its own quadratic field.

    The norm must be a rational N-th power; roots are then extracted one prime
    factor of N at a time, following every branch.
    """
    if N < 1:
        raise DomainError("N must be positive")
    if N == 1:
        return PowerTestResult(True, alpha)
    if alpha.d < 0 and rational_root(alpha.norm(), N) is None:
        return PowerTestResult(False)
    candidates = [alpha]
    for p, e in sorted(factorint(N).items()):
        for _ in range(e):
            nxt: list[QuadElem] = []
            for c in candidates:
                for r in _prime_roots(c, p):
                    if r not in nxt:
                        nxt.append(r)
            candidates = nxt
            if not candidates:
                return PowerTestResult(False)
    witness = candidates[0]
    if witness**N != alpha:
        raise InternalConsistencyError("power witness does not reproduce alpha")
    return PowerTestResult(True, witness)


def is_square(alpha: QuadElem) -> bool:
    return quad_sqrt(alpha) is not None


def is_fourth_power(alpha: QuadElem) -> bool:
    r = quad_sqrt(alpha)
    return r is not None and (quad_sqrt(r) is not None or quad_sqrt(-r) is not None)


# -- Prop. 8 style square tests -------------------------------------------------


@dataclass(frozen=True)
class Prop8Result:
    alpha_is_square: bool
    minus_alpha_is_square: bool | None  # only decided when alpha is not a square


def prop8_tests(epsilon: QuadElem, d: RationalLike) -> Prop8Result:
    """Square classes of ``alpha = (epsilon/sqrt d)**2`` from rationals alone.

    alpha is a square in E iff d is a rational square; otherwise -alpha is a
    square iff D/d is one.
    """
    d = as_fraction(d)
    if d <= 0:
        raise DomainError("d must be a positive rational")
    if epsilon.y == 0 or epsilon.d > 0:
        raise DomainError("epsilon must have a nonzero imaginary part in an imaginary field")
    if is_rational_square(d):
        return Prop8Result(True, None)
    return Prop8Result(False, is_rational_square(Fraction(-epsilon.d) / d))


def check_A1(alpha: QuadElem) -> bool:
    """alpha is not a square and -4*alpha is not a fourth power."""
    if alpha == 0:
        raise DomainError("alpha must be nonzero")
    return not is_square(alpha) and not is_fourth_power(-4 * alpha)


def check_A2(exponent: int, D: int) -> bool:
    """Is Q(i sqrt D) linearly disjoint from Q(mu_{2**exponent})?

    The quadratic subfields of Q(mu_4) are {Q(i)}, those of Q(mu_{2^n}) for
    n >= 3 are Q(i), Q(sqrt 2), Q(i sqrt 2).  D < 0 denotes the real field
    Q(sqrt |D|).
    """
    if exponent < 2:
        raise DomainError("the 2-power exponent must be at least 2")
    d = -D
    bad = {-1} if exponent == 2 else {-1, 2, -2}
    return d not in bad


class Lemma3Condition(enum.Enum):
    UNCONDITIONALLY_ABELIAN = "unconditionally_abelian"
    ALPHA_IS_NTH_POWER = "alpha_is_nth_power"
    ALPHA_IS_HALF_NTH_POWER = "alpha_is_half_nth_power"
    ALPHA_IS_MINUS_LAMBDA_TO_HALF_N = "alpha_is_minus_lambda_to_half_n"
    PRECONDITIONS_NOT_MET = "preconditions_not_met"


def lemma3_condition(alpha: QuadElem, N: int) -> Lemma3Condition:
    """Which power condition on alpha characterises K_N(alpha)/E being abelian."""
    if N < 2:
        raise DomainError("N must be at least 2")
    w = unity_order(alpha)
    if gcd(w, N) > 2:
        raise DomainError(f"E contains roots of unity of order {gcd(w, N)} dividing N = {N}")
    if N == 2:
        return Lemma3Condition.UNCONDITIONALLY_ABELIAN
    two_exp = (N & -N).bit_length() - 1
    if two_exp == 0:
        return Lemma3Condition.ALPHA_IS_NTH_POWER
    if two_exp == 1:
        return Lemma3Condition.ALPHA_IS_HALF_NTH_POWER
    if check_A1(alpha) and check_A2(two_exp, -alpha.d):
        return Lemma3Condition.ALPHA_IS_MINUS_LAMBDA_TO_HALF_N
    return Lemma3Condition.PRECONDITIONS_NOT_MET


def lemma3_witness(alpha: QuadElem, N: int) -> QuadElem | None:
    """An element lambda realising the condition of :func:`lemma3_condition`, if any.

    Returns None when the condition fails; for ``UNCONDITIONALLY_ABELIAN``
    returns alpha itself.
    """
    cond = lemma3_condition(alpha, N)
    if cond is Lemma3Condition.UNCONDITIONALLY_ABELIAN:
        return alpha
    if cond is Lemma3Condition.ALPHA_IS_NTH_POWER:
        return nth_power_test(alpha, N).witness
    if cond is Lemma3Condition.ALPHA_IS_HALF_NTH_POWER:
        return nth_power_test(alpha, N // 2).witness
    if cond is Lemma3Condition.ALPHA_IS_MINUS_LAMBDA_TO_HALF_N:
        return nth_power_test(-alpha, N // 2).witness
    return None


# -- admissibility of the denominator b -----------------------------------------


class Obstruction(str, enum.Enum):
    OK = "ok"
    B_MULTIPLE_OF_4 = "b_multiple_of_4"
    UNITY_CONSTRAINT_VIOLATED = "unity_constraint_violated"


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    reason: Obstruction
    unity: UnityContent
    a1_holds: bool | None = None
    notes: tuple[str, ...] = field(default=())


def _unity_constraints(n: int, a: int, b: int, D: int) -> list[str]:
    """Violated arithmetic consequences of E_n containing extra roots of unity."""
    bad = []
    if n == 4:
        if D == 3:
            bad.append("Q(i sqrt 3) cannot occur for n = 4")
        if D == 1 and b % 2 == 0:
            bad.append("E = Q(i) forces b odd")
    else:
        if D == 3 and n == 3 and not (a % 3 == 0 and b % 3 != 0):
            bad.append("E_3 = Q(i sqrt 3) forces 3 | a and gcd(b, 3) = 1")
        if D == 3 and n == 6 and b % 3 == 0:
            bad.append("E_6 = Q(i sqrt 3) forces gcd(b, 3) = 1")
        if D == 1 and b % 4 == 0:
            bad.append("E = Q(i) forbids 4 | b")
    return bad


def admissible_b(n: int, a: int, b: int, field_data: PyramidFieldData | None = None) -> AdmissibilityVerdict:
    """Necessary conditions on b for K_b(alpha)/E_n to be abelian."""
    fd = field_data or case_b_field_data(n, a, b)
    unity = roots_of_unity_in(fd.D)
    notes = [f"E = Q(i sqrt {fd.D}), |mu(E)| = {unity.group_order}"]
    violated = _unity_constraints(n, a, b, fd.D)
    if violated:
        return AdmissibilityVerdict(False, Obstruction.UNITY_CONSTRAINT_VIOLATED, unity, None, tuple(notes + violated))
    if b % 4 == 0:
        return AdmissibilityVerdict(False, Obstruction.B_MULTIPLE_OF_4, unity, None, tuple(notes))
    a1 = None
    if b % 2 == 0:
        p8 = prop8_tests(fd.eps, fd.d_theta)
        a1 = not p8.alpha_is_square and not p8.minus_alpha_is_square
        if n == 4 and not a1:
            raise InternalConsistencyError(f"A1 must hold for n = 4 and even b, failed at v = {a}/{b}")
        notes.append(f"A1 {'holds' if a1 else 'fails'} for even b")
    return AdmissibilityVerdict(True, Obstruction.OK, unity, a1, tuple(notes))
