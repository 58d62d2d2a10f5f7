"""Norm equations ``(b^2 - a^2)^2 = 2^k * 3^l * n^b`` and their solution sets.

Closed-form enumerations follow the structure of the proofs; every one of them
has a brute-force counterpart used as an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .errors import DomainError, InternalConsistencyError
from .exactnum import iroot, split_prime_power

REGULAR = "regular"
TWO_POWER_PAIR = "two_power_pair"
TRIANGULAR_EXTRA = "triangular_extra"
HEX_F1 = "hex_F1"
HEX_F2 = "hex_F2"
BRUTE_FORCE = "brute_force"


@dataclass(frozen=True, order=True)
class NormEquationSolution:
    """``scale * (b^2 - a^2)^2 == 2^k * 3^l * n_odd^b``, checked on construction.

    ``scale`` is 9 for the triangular norm ``N(z_3) = 9 (b^2 - a^2)^2``.
    The family tag and its parameters do not take part in equality.
    """

    a: int
    b: int
    k: int
    n_odd: int
    l: int = 0
    scale: int = 1
    family: str = field(default=BRUTE_FORCE, compare=False)
    params: tuple[tuple[str, int], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not (1 <= self.a < self.b) or gcd(self.a, self.b) != 1:
            raise InternalConsistencyError(f"({self.a}, {self.b}) is not a coprime pair with 1 <= a < b")
        if self.n_odd < 1 or self.n_odd % 2 == 0 or self.k < 0 or self.l < 0:
            raise InternalConsistencyError(f"bad exponents in {self!r}")
        lhs = self.scale * (self.b**2 - self.a**2) ** 2
        rhs = 2**self.k * 3**self.l * self.n_odd**self.b
        if lhs != rhs:
            raise InternalConsistencyError(f"norm identity fails for ({self.a}, {self.b}): {lhs} != {rhs}")

    @property
    def pair(self) -> tuple[int, int]:
        return self.a, self.b

    def param(self, name: str) -> int:
        return dict(self.params)[name]

    def __str__(self) -> str:
        tag = self.family + (f"({', '.join(f'{k}={v}' for k, v in self.params)})" if self.params else "")
        lhs = f"{self.scale}*" if self.scale != 1 else ""
        rhs = f"2^{self.k}" + (f"*3^{self.l}" if self.l else "") + f"*{self.n_odd}^{self.b}"
        return f"(a,b)=({self.a},{self.b}) {lhs}(b^2-a^2)^2 = {rhs} [{tag}]"


def gcd_prime_support(n: int) -> frozenset[int]:
    """Rational primes below the common prime ideals of z and its conjugate."""
    if n == 4:
        return frozenset({2})
    if n in (3, 6):
        return frozenset({2, 3})
    raise DomainError(f"n must be one of 3, 4, 6, got {n}")


def largest_b(bound, search_limit: int = 200) -> int:
    """Largest b < search_limit with ``bound(b)`` true; exponential-vs-polynomial bounds die out well before."""
    return max(b for b in range(1, search_limit) if bound(b))


def _two_power_pairs(b_max: int) -> Iterator[tuple[int, int, int]]:
    s = 1
    while 2**s + 1 <= b_max:
        yield s, 2**s - 1, 2**s + 1
        s += 1


def _two_power_solution(s: int) -> NormEquationSolution:
    a, b = 2**s - 1, 2**s + 1
    return NormEquationSolution(a, b, 2 * s + 4, 1, family=TWO_POWER_PAIR, params=(("s", s),))


def _odd_power_solution(a: int, b: int, scale: int = 1) -> NormEquationSolution | None:
    """Solution record when the odd part of ``scale*(b^2-a^2)^2`` is an exact b-th power."""
    k, odd = split_prime_power(scale * (b * b - a * a) ** 2, 2)
    root, exact = iroot(odd, b)
    if not exact:
        return None
    return NormEquationSolution(a, b, k, root, scale=scale)


def solve_prop10(b_max: int) -> frozenset[NormEquationSolution]:
    """Solutions of ``(b^2-a^2)^2 = 2^k n^b`` (n odd) with b <= b_max.

    n = 1 forces ``b - a`` and ``b + a`` to be powers of two, giving
    ``(2^s - 1, 2^s + 1)``.  For n >= 3 the inequality ``3^b <= b^4`` confines
    b to a short range that is scanned exhaustively.
    """
    if b_max < 2:
        raise DomainError("b_max must be at least 2")
    out = {_two_power_solution(s) for s, _, _ in _two_power_pairs(b_max)}
    for b in range(2, min(largest_b(lambda b: 3**b <= b**4), b_max) + 1):
        for a in range(1, b):
            if gcd(a, b) != 1:
                continue
            sol = _odd_power_solution(a, b)
            if sol is not None and sol.n_odd >= 3:
                out.add(NormEquationSolution(a, b, sol.k, sol.n_odd, family=REGULAR))
    return frozenset(out)


def oracle_norm_equation(b_max: int) -> frozenset[NormEquationSolution]:
    """Brute force over every coprime pair a < b <= b_max."""
    if b_max < 2:
        raise DomainError("b_max must be at least 2")
    out = set()
    for b in range(2, b_max + 1):
        for a in range(1, b):
            if gcd(a, b) == 1:
                sol = _odd_power_solution(a, b)
                if sol is not None:
                    out.add(sol)
    return frozenset(out)


# -- triangular base ----------------------------------------------------------


def triangular_case1() -> frozenset[NormEquationSolution]:
    """a not divisible by 3: ``9 (b^2-a^2)^2 = 2^k (3m)^b`` with ``3^b <= 9 b^4``."""
    out = set()
    for b in range(2, largest_b(lambda b: 3**b <= 9 * b**4) + 1):
        for a in range(1, b):
            if a % 3 == 0 or gcd(a, b) != 1 or 4 * a * a >= 3 * b * b:
                continue
            sol = _odd_power_solution(a, b, scale=9)
            if sol is not None and sol.n_odd % 3 == 0:
                out.add(NormEquationSolution(a, b, sol.k, sol.n_odd, scale=9, family=TRIANGULAR_EXTRA))
    return frozenset(out)


def triangular_case2() -> frozenset[NormEquationSolution]:
    """a = 3A: the 3-part of ``9 (b^2-a^2)^2`` is exactly 9, reducing to the square-base equation.

    The two-power family is cut by ``4a^2 < 3b^2``; a/b increases with s, so
    the scan stops at the first failure.
    """
    cands = [(sol.a, sol.b) for sol in solve_prop10(9) if sol.family == REGULAR]
    s = 1
    while 4 * (2**s - 1) ** 2 < 3 * (2**s + 1) ** 2:
        cands.append((2**s - 1, 2**s + 1))
        s += 1
    out = set()
    for a, b in cands:
        if a % 3 != 0 or 4 * a * a >= 3 * b * b:
            continue
        k, odd = split_prime_power((b * b - a * a) ** 2, 2)
        root, exact = iroot(odd, b)
        if not exact:
            raise InternalConsistencyError(f"({a}, {b}) is not a square-base solution")
        fam = TWO_POWER_PAIR if root == 1 else REGULAR
        params = (("s", k // 2 - 2),) if root == 1 else ()
        out.add(NormEquationSolution(a, b, k, root, l=2, scale=9, family=fam, params=params))
    return frozenset(out)


def triangular_enumerate() -> frozenset[NormEquationSolution]:
    return triangular_case1() | triangular_case2()


# -- hexagonal base -------------------------------------------------------------


@dataclass(frozen=True)
class EliminationCertificate:
    member: NormEquationSolution
    s: int
    d: int
    b_exceeds_d_plus_2: bool
    b_exceeds_s: bool
    contradiction: str = "unit_argument"

    @property
    def valid(self) -> bool:
        return self.b_exceeds_d_plus_2 and self.b_exceeds_s


def _hex_member(s: int, d: int) -> NormEquationSolution | None:
    p3, p2 = 3**s, 2**d
    if d < 1:
        return None
    if p2 < p3 < 3 * p2:
        fam, a = HEX_F1, p3 - p2
    elif p3 < p2 < 3 * p3:
        fam, a = HEX_F2, p2 - p3
    else:
        return None
    b = p3 + p2
    if gcd(a, b) != 1 or 2 * a >= b:
        raise InternalConsistencyError(f"family member ({a}, {b}) violates gcd or a < b/2")
    K, rest = split_prime_power(b * b - a * a, 2)
    L, rest = split_prime_power(rest, 3)
    if rest != 1 or (K, L) != (d + 2, s):
        raise InternalConsistencyError(f"b^2 - a^2 != 2^(d+2) 3^s for (s, d) = ({s}, {d})")
    return NormEquationSolution(a, b, 2 * K, 1, l=2 * L, family=fam, params=(("s", s), ("d", d)))


def hexagonal_families(s_max: int, d_max: int, s_min: int = 1) -> frozenset[NormEquationSolution]:
    """Members of the two families ``(|3^s - 2^d|, 3^s + 2^d)`` with s <= s_max, d <= d_max.

    ``s_min = 0`` adds (1, 3), which has no factor 3 and belongs to the
    square-base equation instead.
    """
    if s_max < 1 or d_max < 1:
        raise DomainError("family bounds must be at least 1")
    out = set()
    for s in range(s_min, s_max + 1):
        for d in range(1, d_max + 1):
            m = _hex_member(s, d)
            if m is not None:
                out.add(m)
    return frozenset(out)


def hexagonal_families_up_to_b(b_max: int, s_min: int = 1) -> frozenset[NormEquationSolution]:
    out = set()
    s = s_min
    while 3**s + 2 <= b_max:
        d = 1
        while 3**s + 2**d <= b_max:
            m = _hex_member(s, d)
            if m is not None:
                out.add(m)
            d += 1
        s += 1
    return frozenset(out)


def hexagonal_brute_force(b_max: int) -> frozenset[tuple[int, int]]:
    """Coprime (a, b) with a < b/2 and b^2 - a^2 of the form 2^K 3^L (K, L >= 0), b <= b_max."""
    out = set()
    for b in range(2, b_max + 1):
        for a in range(1, (b + 1) // 2):
            if 2 * a >= b or gcd(a, b) != 1:
                continue
            _, rest = split_prime_power(b * b - a * a, 2)
            _, rest = split_prime_power(rest, 3)
            if rest == 1:
                out.add((a, b))
    return frozenset(out)


def hexagonal_exhaustiveness(b_max: int) -> tuple[frozenset[tuple[int, int]], frozenset[tuple[int, int]]]:
    """Pairs found only by brute force, and pairs found only by the families (both empty when they agree)."""
    brute = hexagonal_brute_force(b_max)
    fams = frozenset(m.pair for m in hexagonal_families_up_to_b(b_max, s_min=0))
    return brute - fams, fams - brute


def hexagonal_eliminate(member: NormEquationSolution) -> EliminationCertificate:
    """Certify that an ideal of norm-exponent ``2b`` cannot divide z, so z/conj(z) would be a unit."""
    if member.family not in (HEX_F1, HEX_F2):
        raise DomainError("only hexagonal family members can be eliminated")
    s, d = member.param("s"), member.param("d")
    a, b = member.a, member.b
    if (b * b - a * a) ** 2 != 2 ** (2 * d + 4) * 3 ** (2 * s):
        raise InternalConsistencyError(f"N(z) != 2^(2d+4) 3^(2s) for ({a}, {b})")
    cert = EliminationCertificate(member, s, d, b > d + 2, b > s)
    if not cert.valid:
        raise InternalConsistencyError(f"elimination inequality fails for ({a}, {b}), s={s}, d={d}")
    return cert


def hexagonal_member_for(a: int, b: int) -> NormEquationSolution | None:
    """The family member with this (a, b), if b^2 - a^2 = 2^K 3^L with L >= 1."""
    K, rest = split_prime_power(b * b - a * a, 2)
    L, rest = split_prime_power(rest, 3)
    if rest != 1 or L < 1 or K < 3:
        return None
    m = _hex_member(L, K - 2)
    return m if m is not None and m.pair == (a, b) else None


# -- per-n membership used by the verdict pipeline -------------------------------


def norm_equation_member(n: int, a: int, b: int) -> NormEquationSolution | None:
    """The solution of the n-specific norm equation at (a, b), or None when (a, b) solves none.

    n = 6 members with a factor 3 come from the hexagonal families.
    """
    gcd_prime_support(n)
    if n == 4:
        for sol in solve_prop10(b):
            if sol.pair == (a, b):
                return sol
        return None
    if n == 3:
        for sol in triangular_case1() if a % 3 else triangular_case2():
            if sol.pair == (a, b):
                return sol
        return None
    K, rest = split_prime_power((b * b - a * a) ** 2, 2)
    L, rest = split_prime_power(rest, 3)
    if L == 0:
        for sol in solve_prop10(b):
            if sol.pair == (a, b):
                return sol
        return None
    root, exact = iroot(rest, b)
    if not exact:
        return None
    if root != 1:
        # 9 * 5^b <= (b^2 - a^2)^2 < b^4 has no solution
        raise InternalConsistencyError(f"unexpected prime-to-6 part {root}^{b} at ({a}, {b})")
    member = hexagonal_member_for(a, b)
    if member is None:
        raise InternalConsistencyError(f"({a}, {b}) solves the l >= 1 equation but is in neither family")
    return member
