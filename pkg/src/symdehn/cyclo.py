"""Cyclotomic arithmetic and rational relations between two cosines.

:func:`solve_two_cosine_relation` classifies the rational-angle solutions of
``A cos x + B cos y = C``; :func:`oracle_two_cosine` finds them by exhaustive
search in exact cyclotomic arithmetic and is kept independent of the solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Literal

from sympy import isprime, primefactors, totient

from .errors import ConductorLimitError, DomainError
from .exactnum import QuadElem, RationalLike, as_fraction

Poly = tuple[int, ...]  # coefficients, lowest degree first


def _poly_divmod_monic(num: list, den: Poly) -> tuple[list, list]:
    """Long division by a monic polynomial; works for int or Fraction coefficients."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    return quot, num[:dd]


def _poly_mul(a: Poly, b: Poly) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Poly:
    """The m-th cyclotomic polynomial, as integer coefficients lowest degree first."""
    if m < 1:
        raise DomainError("cyclotomic_poly needs m >= 1")
    num: list = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod_monic(num, cyclotomic_poly(d))
            if any(rem):
                raise AssertionError(f"Phi_{d} does not divide X^{m}-1")
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def euler_phi(m: int) -> int:
    return int(totient(m))


@dataclass(frozen=True)
class CycloElem:
    """A polynomial in ``zeta_m = exp(2*pi*i/m)`` reduced modulo Phi_m."""

    m: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != euler_phi(self.m):
            raise DomainError(f"element of Q(zeta_{self.m}) needs {euler_phi(self.m)} coefficients")

    @classmethod
    def from_poly(cls, m: int, poly: Iterable[RationalLike]) -> CycloElem:
        phi = cyclotomic_poly(m)
        coeffs = [as_fraction(c) for c in poly]
        _, rem = _poly_divmod_monic(coeffs, phi)
        rem = list(rem) + [Fraction(0)] * (len(phi) - 1 - len(rem))
        return cls(m, tuple(Fraction(c) for c in rem))

    @classmethod
    def rational(cls, m: int, q: RationalLike) -> CycloElem:
        return cls.from_poly(m, [q])

    @classmethod
    def zeta_power(cls, m: int, k: int) -> CycloElem:
        k %= m
        return cls.from_poly(m, [0] * k + [1])

    def lift(self, big_m: int) -> CycloElem:
        """The same number inside Q(zeta_M) for a multiple M of m."""
        if big_m % self.m:
            raise DomainError(f"{self.m} does not divide {big_m}")
        step = big_m // self.m
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            poly[j * step] = c
        return CycloElem.from_poly(big_m, poly)

    def _align(self, other: CycloElem) -> tuple[CycloElem, CycloElem]:
        if self.m == other.m:
            return self, other
        big = self.m * other.m // gcd(self.m, other.m)
        return self.lift(big), other.lift(big)

    def _coerce(self, other: object) -> CycloElem | None:
        if isinstance(other, CycloElem):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloElem.rational(self.m, other)
        return None

    def __add__(self, other: object) -> CycloElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        return CycloElem(a.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycloElem:
        return CycloElem(self.m, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> CycloElem:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> CycloElem:
        return (-self) + other

    def __mul__(self, other: object) -> CycloElem:
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycloElem(self.m, tuple(c * other for c in self.coeffs))
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self._align(other)
        return CycloElem.from_poly(a.m, _poly_mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._align(o)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        return hash((self.m, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])


@dataclass(frozen=True, order=True)
class RationalAngle:
    """The angle ``pi*p/q`` modulo pi, stored with ``0 <= p/q < 1`` in lowest terms."""

    value: Fraction = field(repr=False)

    def __post_init__(self) -> None:
        v = as_fraction(self.value)
        object.__setattr__(self, "value", v - (v.numerator // v.denominator))

    @classmethod
    def of(cls, p: int, q: int = 1) -> RationalAngle:
        return cls(Fraction(p, q))

    @property
    def p(self) -> int:
        return self.value.numerator

    @property
    def q(self) -> int:
        return self.value.denominator

    def __str__(self) -> str:
        if self.p == 0:
            return "0"
        num = "pi" if self.p == 1 else f"{self.p}*pi"
        return num if self.q == 1 else f"{num}/{self.q}"

    def __repr__(self) -> str:
        return f"RationalAngle({self.p}/{self.q})"


def cos_as_cyclo(a: RationalAngle) -> CycloElem:
    """``cos(pi*p/q) = (zeta_2q**p + zeta_2q**-p) / 2`` in Q(zeta_2q)."""
    m = 2 * a.q
    return (CycloElem.zeta_power(m, a.p) + CycloElem.zeta_power(m, -a.p)) * Fraction(1, 2)


# -- the solver -------------------------------------------------------------

# Rational angles in (0, pi) whose cosine is rational (Niven).
NIVEN_COSINES: dict[RationalAngle, Fraction] = {
    RationalAngle.of(1, 3): Fraction(1, 2),
    RationalAngle.of(1, 2): Fraction(0),
    RationalAngle.of(2, 3): Fraction(-1, 2),
}

# cos(k*pi/5) in Q(sqrt 5), from cos(pi/5) = (1 + sqrt5)/4.
_COS_FIFTHS: dict[RationalAngle, QuadElem] = {
    RationalAngle.of(1, 5): QuadElem(5, Fraction(1, 4), Fraction(1, 4)),
    RationalAngle.of(2, 5): QuadElem(5, Fraction(-1, 4), Fraction(1, 4)),
    RationalAngle.of(3, 5): QuadElem(5, Fraction(1, 4), Fraction(-1, 4)),
    RationalAngle.of(4, 5): QuadElem(5, Fraction(-1, 4), Fraction(-1, 4)),
}

Reading = Literal["lemma", "conway_jones"]


def fold(a: RationalAngle) -> tuple[RationalAngle, int]:
    """Map an angle of (0, pi) into (0, pi/2] with the sign of ``cos``."""
    if a.value <= Fraction(1, 2):
        return a, 1
    return RationalAngle(1 - a.value), -1


@dataclass(frozen=True)
class CosineFamily:
    """An infinite solution family.

    ``kind`` is ``"first_fixed"`` / ``"second_fixed"`` (one angle pinned, the
    partner free), ``"equal"`` (y = x) or ``"supplementary"`` (y = pi - x).
    """

    kind: str
    angle: RationalAngle | None = None

    def members(self, q_max: int) -> Iterator[tuple[RationalAngle, RationalAngle]]:
        for t in open_angles(q_max):
            if self.kind == "first_fixed":
                yield self.angle, t
            elif self.kind == "second_fixed":
                yield t, self.angle
            elif self.kind == "equal":
                yield t, t
            else:
                yield t, RationalAngle(1 - t.value)

    def __str__(self) -> str:
        if self.kind == "first_fixed":
            return f"(x, y) = ({self.angle}, free)"
        if self.kind == "second_fixed":
            return f"(x, y) = (free, {self.angle})"
        return "y = x" if self.kind == "equal" else "y = pi - x"


@dataclass(frozen=True)
class TwoCosineSolutions:
    pairs: tuple[tuple[RationalAngle, RationalAngle], ...] = ()
    families: tuple[CosineFamily, ...] = ()

    @property
    def is_finite(self) -> bool:
        return not self.families

    def expand(self, q_max: int) -> frozenset[tuple[RationalAngle, RationalAngle]]:
        """All solutions whose two denominators are at most ``q_max``."""
        out = {pr for pr in self.pairs if pr[0].q <= q_max and pr[1].q <= q_max}
        for fam in self.families:
            out.update(pr for pr in fam.members(q_max) if pr[0].q <= q_max and pr[1].q <= q_max)
        return frozenset(out)

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)


def solve_two_cosine_relation(
    A: RationalLike, B: RationalLike, C: RationalLike, reading: Reading = "conway_jones"
) -> TwoCosineSolutions:
    """All rational angles x, y in (0, pi) with ``A cos x + B cos y = C``.

    ``reading="lemma"`` only admits pairs whose folded angles are pi/2 and
    pi/3 (the two-angle statement taken literally); ``"conway_jones"`` also
    admits the irrational relation cos(pi/5) - cos(2pi/5) = 1/2.
    """
    A, B, C = as_fraction(A), as_fraction(B), as_fraction(C)
    if A == 0 and B == 0:
        raise DomainError("at least one cosine coefficient must be nonzero")

    if A == 0 or B == 0:
        coef, which = (A, "first_fixed") if B == 0 else (B, "second_fixed")
        target = C / coef
        fams = tuple(CosineFamily(which, t) for t, c in NIVEN_COSINES.items() if c == target)
        return TwoCosineSolutions((), fams)

    families = []
    if A + B == 0 and C == 0:
        families.append(CosineFamily("equal"))
    if A == B and C == 0:
        families.append(CosineFamily("supplementary"))

    pairs = set()
    # a rational cosine forces the other cosine rational too
    for (x, cx), (y, cy) in itertools.product(NIVEN_COSINES.items(), repeat=2):
        if A * cx + B * cy == C:
            pairs.add((x, y))
    if reading == "conway_jones":
        for (x, cx), (y, cy) in itertools.product(_COS_FIFTHS.items(), repeat=2):
            if fold(x)[0] != fold(y)[0] and cx * A + cy * B == C:
                pairs.add((x, y))

    def in_family(pr: tuple[RationalAngle, RationalAngle]) -> bool:
        x, y = pr
        return any(
            (f.kind == "equal" and x == y) or (f.kind == "supplementary" and x.value + y.value == 1)
            for f in families
        )

    return TwoCosineSolutions(tuple(sorted(p for p in pairs if not in_family(p))), tuple(families))


# -- the brute-force oracle ---------------------------------------------------


def open_angles(q_max: int) -> Iterator[RationalAngle]:
    """Rational angles pi*p/q in (0, pi) with q <= q_max, by increasing q."""
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield RationalAngle.of(p, q)


@lru_cache(maxsize=None)
def _prime_with_root_of_unity(M: int, skip: int = 0) -> tuple[int, int]:
    """A prime l = 1 (mod M) above 2**30 and an element of exact order M mod l."""
    k = (1 << 30) // M + 1
    found = 0
    while True:
        ell = k * M + 1
        if isprime(ell):
            if found == skip:
                break
            found += 1
        k += 1
    factors = primefactors(M)
    for g in itertools.count(2):
        w = pow(g, (ell - 1) // M, ell)
        if all(pow(w, M // r, ell) != 1 for r in factors):
            return ell, w


def _mod_image(q: Fraction, ell: int) -> int:
    return q.numerator % ell * pow(q.denominator, -1, ell) % ell


def oracle_two_cosine(
    A: RationalLike,
    B: RationalLike,
    C: RationalLike,
    q_max: int,
    conductor_cap: int | None = None,
) -> frozenset[tuple[RationalAngle, RationalAngle]]:
    """Every pair of rational angles in (0, pi) with denominators <= q_max solving
    ``A cos x + B cos y = C``, found by exhaustive search.

    Each candidate pair is first mapped through ring homomorphisms
    Z[zeta_M] -> F_l (a nonzero image proves the relation false), and every
    survivor is confirmed in exact arithmetic in Q(zeta_M), M = lcm(2q1, 2q2).
    """
    if q_max < 2:
        raise DomainError("q_max must be at least 2")
    A, B, C = as_fraction(A), as_fraction(B), as_fraction(C)
    cap = 4 * q_max if conductor_cap is None else conductor_cap

    by_q: dict[int, list[int]] = {}
    for a in open_angles(q_max):
        by_q.setdefault(a.q, []).append(a.p)

    solutions = set()
    for q1, q2 in itertools.product(by_q, repeat=2):
        M = 2 * q1 * q2 // gcd(q1, q2)
        candidates = None
        for skip in (0, 1):
            ell, w = _prime_with_root_of_unity(M, skip)
            if any(c.denominator % ell == 0 for c in (A, B, C)):
                continue
            inv2 = pow(2, -1, ell)
            a_, b_, c_ = (_mod_image(c, ell) for c in (A, B, C))

            def cos_mod(p: int, q: int) -> int:
                e = p * (M // (2 * q))
                return (pow(w, e, ell) + pow(w, M - e, ell)) * inv2 % ell

            cos_y: dict[int, list[int]] = {}
            for p2 in by_q[q2]:
                cos_y.setdefault(cos_mod(p2, q2), []).append(p2)
            found = set()
            for p1 in by_q[q1]:
                # A cos x + B cos y - C vanishes iff b_*cos_y == c_ - a_*cos_x
                lhs = (c_ - a_ * cos_mod(p1, q1)) % ell
                if b_ == 0:
                    if lhs == 0:
                        found.update((p1, p2) for p2 in by_q[q2])
                    continue
                target = lhs * pow(b_, -1, ell) % ell
                found.update((p1, p2) for p2 in cos_y.get(target, ()))
            candidates = found if candidates is None else candidates & found
            if not candidates:
                break
        for p1, p2 in sorted(candidates or ()):
            if M > cap:
                raise ConductorLimitError(
                    f"confirming ({p1}/{q1}, {p2}/{q2}) needs conductor {M} > cap {cap}"
                )
            x, y = RationalAngle.of(p1, q1), RationalAngle.of(p2, q2)
            if (A * cos_as_cyclo(x) + B * cos_as_cyclo(y) - C).lift(M).is_zero():
                solutions.add((x, y))
    return frozenset(solutions)
