"""Exact rationals, quadratic-field elements, surds and the Q(sqrt5)(i) tower.

Rationals are :class:`fractions.Fraction`; everything else here is built on
top of them.  No floating point is used anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import factorint

from .errors import DomainError, FieldMismatchError

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_fraction(value: RationalLike | str) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# -- integer roots ----------------------------------------------------------


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Floor of the real k-th root of ``n >= 0`` and whether it is exact.

    Binary search over integers, verified by exponentiation.
    """
    if k < 1:
        raise DomainError("root index must be positive")
    if n < 0:
        raise DomainError("iroot needs a nonnegative radicand")
    if n < 2 or k == 1:
        return n, True
    lo, hi = 0, 1 << (n.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo, lo**k == n


def rational_root(q: RationalLike, k: int) -> Fraction | None:
    """Exact k-th root of a rational in Q, or None if there is none.

    For even ``k`` only the nonnegative root is returned.
    """
    q = as_fraction(q)
    sign = 1
    if q < 0:
        if k % 2 == 0:
            return None
        sign, q = -1, -q
    num, exact_num = iroot(q.numerator, k)
    if not exact_num:
        return None
    den, exact_den = iroot(q.denominator, k)
    if not exact_den:
        return None
    return sign * Fraction(num, den)


def is_rational_square(q: RationalLike) -> bool:
    return rational_root(q, 2) is not None


def split_prime_power(n: int, p: int) -> tuple[int, int]:
    """Write ``n = p**e * rest`` with ``p`` not dividing ``rest``; return (e, rest)."""
    if n == 0:
        raise DomainError("zero has no finite valuation")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


# -- squarefree parts -------------------------------------------------------


@lru_cache(maxsize=4096)
def _squarefree_int(n: int) -> tuple[int, int]:
    """Return (s, m) with n = s**2 * m and m squarefree, for n >= 1."""
    s, m = 1, 1
    for p, e in factorint(n).items():
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    return s, m


def squarefree_decompose(x: RationalLike) -> tuple[Fraction, int]:
    """Return ``(r, m)`` with ``x == r**2 * m``, ``r > 0`` and ``m`` squarefree."""
    x = as_fraction(x)
    if x <= 0:
        raise DomainError(f"squarefree decomposition needs x > 0, got {x}")
    # p/q = (p*q) / q**2
    s, m = _squarefree_int(x.numerator * x.denominator)
    return Fraction(s, x.denominator), m


def squarefree_part(n: int) -> int:
    """Signed squarefree part of a nonzero integer."""
    if n == 0:
        raise DomainError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    return sign * _squarefree_int(abs(n))[1]


@lru_cache(maxsize=1024)
def is_squarefree(n: int) -> bool:
    return n != 0 and _squarefree_int(abs(n))[0] == 1


# -- quadratic fields -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QuadElem:
    """The element ``x + y*sqrt(d)`` of Q(sqrt d), d squarefree and not 0 or 1.

    Imaginary fields Q(i*sqrt D) use ``d = -D``.  Elements with ``y == 0`` are
    rational and compare equal across fields.
    """

    d: int
    x: Fraction
    y: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.d, int) or self.d in (0, 1) or not is_squarefree(self.d):
            raise DomainError(f"discriminant {self.d!r} must be a squarefree integer other than 0, 1")
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))

    @classmethod
    def from_radical(cls, x: RationalLike, y: RationalLike, radicand: int) -> QuadElem:
        """Build ``x + y*sqrt(radicand)`` for any nonzero, non-square integer radicand."""
        s, _ = _squarefree_int(abs(radicand))
        d = squarefree_part(radicand)
        return cls(d, as_fraction(x), as_fraction(y) * s)

    @property
    def is_rational(self) -> bool:
        return self.y == 0

    @property
    def is_imaginary_field(self) -> bool:
        return self.d < 0

    def _lift(self, other: object) -> QuadElem | None:
        if isinstance(other, QuadElem):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(self.d, Fraction(other))
        return None

    def _common_d(self, other: QuadElem) -> int:
        if self.d == other.d or other.y == 0:
            return self.d
        if self.y == 0:
            return other.d
        raise FieldMismatchError(f"cannot combine elements of Q(sqrt {self.d}) and Q(sqrt {other.d})")

    def __eq__(self, other: object) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.y == 0 and o.y == 0:
            return self.x == o.x
        return self.d == o.d and self.x == o.x and self.y == o.y

    def __hash__(self) -> int:
        if self.y == 0:
            return hash(self.x)
        return hash((self.d, self.x, self.y))

    def __add__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadElem(self._common_d(o), self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem(self.d, -self.x, -self.y)

    def __sub__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self._common_d(o)
        return QuadElem(d, self.x * o.x + d * self.y * o.y, self.x * o.y + self.y * o.x)

    __rmul__ = __mul__

    def conj(self) -> QuadElem:
        return QuadElem(self.d, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def inverse(self) -> QuadElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in a quadratic field")
        return QuadElem(self.d, self.x / n, -self.y / n)

    def __truediv__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> QuadElem:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> QuadElem:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = QuadElem(self.d, Fraction(1))
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return self.x != 0 or self.y != 0

    def common_denominator(self) -> int:
        return self.x.denominator * self.y.denominator // _gcd(self.x.denominator, self.y.denominator)

    def __str__(self) -> str:
        return f"({_fmt(self.x)} + {_fmt(self.y)}*sqrt({self.d}))"

    def __repr__(self) -> str:
        return f"QuadElem(d={self.d}, x={_fmt(self.x)}, y={_fmt(self.y)})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def quad_norm(z: QuadElem) -> Fraction:
    """Field norm ``x**2 - d*y**2``."""
    return z.norm()


def quad_sqrt(alpha: QuadElem) -> QuadElem | None:
    """A square root of ``alpha`` inside its own field, or None.

    With ``alpha = X + Y*sqrt(d)`` and root ``u + v*sqrt(d)``: if ``Y != 0`` then
    ``u**2 = (X +- sqrt(N(alpha))) / 2`` and ``v = Y / (2u)``.  The root with
    ``u > 0`` (or ``u == 0, v > 0``) is returned.
    """
    X, Y, d = alpha.x, alpha.y, alpha.d
    if Y == 0:
        r = rational_root(X, 2)
        if r is not None:
            return QuadElem(d, r)
        r = rational_root(X / d, 2)
        if r is not None:
            return QuadElem(d, Fraction(0), r)
        return None
    s = rational_root(alpha.norm(), 2)
    if s is None:
        return None
    for cand in ((X + s) / 2, (X - s) / 2):
        u = rational_root(cand, 2)
        if u is not None and u != 0:
            return QuadElem(d, u, Y / (2 * u))
    return None


# -- surd lengths -----------------------------------------------------------


@dataclass(frozen=True, order=True)
class SurdLength:
    """The positive real ``r*sqrt(m)`` with ``r > 0`` rational and ``m`` squarefree."""

    m: int
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", as_fraction(self.r))
        if self.r <= 0:
            raise DomainError("surd lengths are positive")
        if self.m < 1 or not is_squarefree(self.m):
            raise DomainError(f"surd radicand {self.m} must be squarefree and positive")

    @classmethod
    def of(cls, r: RationalLike, radicand: RationalLike = 1) -> SurdLength:
        """Canonical form of ``r*sqrt(radicand)`` for positive rationals."""
        rr, m = squarefree_decompose(radicand)
        return cls(m, as_fraction(r) * rr)

    @classmethod
    def sqrt(cls, x: RationalLike) -> SurdLength:
        return cls.of(1, x)

    def __mul__(self, other: object) -> SurdLength:
        if isinstance(other, SurdLength):
            return SurdLength.of(self.r * other.r, self.m * other.m)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SurdLength(self.m, self.r * other)
        return NotImplemented

    __rmul__ = __mul__

    def ratio(self, other: SurdLength) -> Fraction | None:
        """``self / other`` when the two are Q-proportional, else None."""
        if self.m != other.m:
            return None
        return self.r / other.r

    def squared(self) -> Fraction:
        return self.r * self.r * self.m

    def __str__(self) -> str:
        if self.m == 1:
            return _fmt_short(self.r)
        if self.r == 1:
            return f"sqrt({self.m})"
        return f"{_fmt_short(self.r)}*sqrt({self.m})"


def _fmt_short(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- the tower Q(sqrt5)(i) ----------------------------------------------------


def _q5(v: QuadElem | RationalLike) -> QuadElem:
    if isinstance(v, QuadElem):
        if v.y != 0 and v.d != 5:
            raise FieldMismatchError("tower coefficients must lie in Q(sqrt 5)")
        return v if v.d == 5 else QuadElem(5, v.x)
    return QuadElem(5, as_fraction(v))


@dataclass(frozen=True)
class TowerElem:
    """``p + q*i`` with ``p, q`` in Q(sqrt 5)."""

    p: QuadElem
    q: QuadElem

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", _q5(self.p))
        object.__setattr__(self, "q", _q5(self.q))

    @classmethod
    def one(cls) -> TowerElem:
        return cls(_q5(1), _q5(0))

    @classmethod
    def i(cls) -> TowerElem:
        return cls(_q5(0), _q5(1))

    def __add__(self, other: TowerElem) -> TowerElem:
        return TowerElem(self.p + other.p, self.q + other.q)

    def __sub__(self, other: TowerElem) -> TowerElem:
        return TowerElem(self.p - other.p, self.q - other.q)

    def __mul__(self, other: object) -> TowerElem:
        if isinstance(other, TowerElem):
            return TowerElem(self.p * other.p - self.q * other.q, self.p * other.q + self.q * other.p)
        if isinstance(other, (QuadElem, int, Fraction)):
            s = _q5(other)
            return TowerElem(self.p * s, self.q * s)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> TowerElem:
        if isinstance(other, TowerElem):
            return self * other.conj() * _q5(other.rel_norm()).inverse()
        if isinstance(other, (QuadElem, int, Fraction)):
            return self * _q5(other).inverse()
        return NotImplemented

    def conj(self) -> TowerElem:
        return TowerElem(self.p, -self.q)

    def rel_norm(self) -> QuadElem:
        """``(p + qi)(p - qi) = p**2 + q**2`` in Q(sqrt 5)."""
        return self.p * self.p + self.q * self.q

    def __pow__(self, k: int) -> TowerElem:
        return tower_pow(self, k)

    def __str__(self) -> str:
        return f"[{self.p} + {self.q}*i]"


def tower_pow(w: TowerElem, k: int) -> TowerElem:
    """``w**k`` for ``k >= 0`` by repeated squaring."""
    if k < 0:
        raise DomainError("tower_pow takes a nonnegative exponent")
    result, base = TowerElem.one(), w
    while k:
        if k & 1:
            result = result * base
        base = base * base
        k >>= 1
    return result
