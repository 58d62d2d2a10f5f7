"""Dehn invariants in R (x) R/piZ for the pyramids P_n(h) and the triviality pipeline.

Angles are stored exactly.  An irrational angle psi is represented by
``w = exp(2i psi)``, a norm-one element of an imaginary quadratic field; w
determines psi modulo pi, negation is conjugation and integer combinations
are products.  Lengths are surds ``r*sqrt(m)``.

Zero tests and complexities are exact.  For a prime l split in Q(sqrt d) the
valuation ``v_p(w)`` at a fixed prime p above l is a homomorphism that kills
exactly the roots of unity on norm-one elements, and angles coming from
different imaginary quadratic fields are Q-independent modulo pi*Q.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Iterator, Union

import sympy
from sympy.ntheory import is_quad_residue, sqrt_mod

from .cyclo import NIVEN_COSINES, RationalAngle
from .diophantine import HEX_F1, HEX_F2, hexagonal_eliminate, norm_equation_member
from .errors import DomainError, InternalConsistencyError
from .exactnum import QuadElem, RationalLike, SurdLength, as_fraction, split_prime_power, squarefree_decompose
from .kummer import Obstruction as AdmissibilityReason
from .kummer import admissible_b, is_root_of_unity, unity_order
from .pyramid import (
    TRIG,
    CaseBRatio,
    PyramidSpec,
    case_b_field_data,
    dihedral_cosines,
    height_to_v,
    rational_case_solutions,
)

# -- angles -------------------------------------------------------------------


class Rationality(str, enum.Enum):
    KNOWN_IRRATIONAL = "known_irrational"
    KNOWN_RATIONAL = "known_rational"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True, order=True)
class RationalPi:
    angle: RationalAngle

    @property
    def rationality(self) -> Rationality:
        return Rationality.KNOWN_RATIONAL

    def __str__(self) -> str:
        return str(self.angle)


def _unity_roots(d: int) -> list[QuadElem]:
    """All roots of unity of Q(sqrt d) listed as exp(2 pi i j / N), j = 0..N-1."""
    N = unity_order(QuadElem(d, 1))
    if N == 4:
        return [QuadElem(d, 1), QuadElem(d, 0, 1), QuadElem(d, -1), QuadElem(d, 0, -1)]
    if N == 6:
        h = Fraction(1, 2)
        return [QuadElem(d, x, y) for x, y in ((1, 0), (h, h), (-h, h), (-1, 0), (-h, -h), (h, -h))]
    return [QuadElem(d, 1), QuadElem(d, -1)]


@dataclass(frozen=True, eq=False)
class ArgOf:
    """The angle psi modulo pi with ``exp(2i psi) = w``."""

    w: QuadElem
    label: str = ""

    def __post_init__(self) -> None:
        if self.w.norm() != 1:
            raise DomainError(f"{self.w} does not have norm 1")
        if self.w.y != 0 and self.w.d > 0:
            raise DomainError("angle proxies live in imaginary quadratic fields")

    @property
    def rationality(self) -> Rationality:
        if self.w.y == 0 or is_root_of_unity(self.w):
            return Rationality.KNOWN_RATIONAL
        return Rationality.KNOWN_IRRATIONAL

    @property
    def is_rational(self) -> bool:
        return self.rationality is Rationality.KNOWN_RATIONAL

    def rational_value(self) -> RationalAngle | None:
        if not self.is_rational:
            return None
        d = self.w.d if self.w.y != 0 else -1
        roots = _unity_roots(d)
        return RationalAngle.of(roots.index(self.w), len(roots))

    def __neg__(self) -> ArgOf:
        return ArgOf(self.w.conj(), self.label and f"-{self.label}")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ArgOf) and self.w == other.w

    def __hash__(self) -> int:
        return hash(("arg", self.w))

    def sort_key(self) -> tuple:
        return (0, self.w.d, self.w.x, self.w.y)

    def __str__(self) -> str:
        return self.label or f"arg({self.w})/2"


@dataclass(frozen=True, order=True)
class SymbolicAngle:
    """An angle with no exact proxy; its relations to other angles are unknown."""

    name: str

    @property
    def rationality(self) -> Rationality:
        return Rationality.UNDETERMINED

    def sort_key(self) -> tuple:
        return (1, self.name)

    def __str__(self) -> str:
        return self.name


Angle = Union[RationalPi, ArgOf, SymbolicAngle]


def _niven_angle(c: Fraction) -> RationalAngle | None:
    """t*pi in (0, pi) with cos = c when c is 0 or +-1/2."""
    for ang, val in NIVEN_COSINES.items():
        if val == c:
            return ang
    return None


def angle_from_cos(c: RationalLike, label: str = "") -> Angle:
    """The angle psi in (0, pi) with ``cos psi = c``."""
    c = as_fraction(c)
    if not -1 < c < 1:
        raise DomainError("cosine must lie strictly between -1 and 1")
    ang = _niven_angle(c)
    if ang is not None:
        return RationalPi(ang)
    # exp(2i psi) = 2c^2 - 1 + 2i c sin(psi), sin(psi) = r sqrt(m)
    r, m = squarefree_decompose(1 - c * c)
    return ArgOf(QuadElem(-m, 2 * c * c - 1, 2 * c * r), label)


def angle_from_cos_double(c2: RationalLike, label: str = "") -> Angle:
    """The angle psi in (0, pi/2) with ``cos 2psi = c2``."""
    c2 = as_fraction(c2)
    if not -1 < c2 < 1:
        raise DomainError("cosine must lie strictly between -1 and 1")
    ang = _niven_angle(c2)
    if ang is not None:
        return RationalPi(RationalAngle(ang.value / 2))
    r, m = squarefree_decompose(1 - c2 * c2)
    return ArgOf(QuadElem(-m, c2, r), label)


def _is_zero_angle(a: Angle) -> bool:
    return a.rationality is Rationality.KNOWN_RATIONAL


# -- split-prime valuations ----------------------------------------------------


def _splits(d: int, ell: int) -> bool:
    if ell == 2:
        return d % 8 == 1
    return d % ell != 0 and is_quad_residue(d % ell, ell)


@lru_cache(maxsize=None)
def _ell_adic_sqrt(d: int, ell: int, k: int) -> int:
    """A square root of d modulo ell**k, chosen compatibly for every k."""
    if ell == 2:
        roots = [r for r in sqrt_mod(d, 2 ** (k + 2), all_roots=True) if r % 4 == 1]
        return min(roots) % 2**k
    r0 = min(sqrt_mod(d % ell, ell, all_roots=True))
    return next(r for r in sqrt_mod(d, ell**k, all_roots=True) if r % ell == r0)


def _int_valuation(n: int, ell: int) -> int:
    return split_prime_power(abs(n), ell)[0]


def valuation_vector(w: QuadElem) -> dict[tuple[int, int], int]:
    """Nonzero valuations of a norm-one w at one prime above each split l, keyed by (d, l)."""
    if w.y == 0:
        return {}
    den = w.common_denominator()
    A, B = int(w.x * den), int(w.y * den)
    out = {}
    for ell in sympy.primefactors(den):
        if not _splits(w.d, ell):
            continue
        k = _int_valuation(A * A - w.d * B * B, ell) + 1
        r = _ell_adic_sqrt(w.d, ell, k)
        val = _int_valuation((A + B * r) % ell**k or ell**k, ell) - _int_valuation(den, ell)
        if val:
            out[(w.d, ell)] = val
    return out


def _rank(rows: list[dict]) -> int:
    rows = [r for r in rows if any(r.values())]
    if not rows:
        return 0
    cols = sorted({k for r in rows for k in r})
    return sympy.Matrix([[r.get(c, 0) for c in cols] for r in rows]).rank()


def angle_rank(angles: Iterable[Angle]) -> int:
    """Rank of the Z-span of exactly known angles modulo pi*Q."""
    return _rank([valuation_vector(a.w) for a in angles if isinstance(a, ArgOf)])


# -- tensors ------------------------------------------------------------------


@dataclass(frozen=True)
class DehnTerm:
    length: SurdLength
    angle: Angle
    multiplicity: int = 1

    @property
    def coefficient(self) -> Fraction:
        """Signed rational coefficient of sqrt(m)."""
        return self.length.r * self.multiplicity

    def __str__(self) -> str:
        negative, angle = self.multiplicity < 0, str(self.angle)
        if angle.startswith("-"):
            negative, angle = not negative, angle[1:]
        sign = "-" if negative else ""
        mult = f"{abs(self.multiplicity)}*" if abs(self.multiplicity) != 1 else ""
        return f"{sign}{mult}{self.length} (x) {angle}"


def _angle_key(a: Angle) -> tuple:
    return a.sort_key()


@dataclass(frozen=True)
class DehnTensor:
    """A finite sum of ``length (x) angle`` in canonical form.

    Canonical form drops rational angles, orients every ArgOf with a positive
    imaginary part and merges terms sharing the radicand and the angle.
    Construct through :meth:`from_terms`.
    """

    terms: tuple[DehnTerm, ...] = ()

    @classmethod
    def zero(cls) -> DehnTensor:
        return cls(())

    @classmethod
    def from_terms(cls, raw: Iterable[tuple[SurdLength | RationalLike, Angle] | tuple[SurdLength | RationalLike, Angle, int] | DehnTerm]) -> DehnTensor:
        acc: dict[tuple[int, Angle], Fraction] = defaultdict(Fraction)
        for item in raw:
            if isinstance(item, DehnTerm):
                m, c, angle = item.length.m, item.coefficient, item.angle
            else:
                length, angle, *rest = item
                mult = rest[0] if rest else 1
                if isinstance(length, SurdLength):
                    m, c = length.m, length.r * mult
                else:
                    m, c = 1, as_fraction(length) * mult
            if c == 0 or _is_zero_angle(angle):
                continue
            if isinstance(angle, ArgOf) and angle.w.y < 0:
                angle, c = -angle, -c
            acc[(m, angle)] += c
        terms = [
            DehnTerm(SurdLength(m, abs(c)), angle, 1 if c > 0 else -1)
            for (m, angle), c in sorted(acc.items(), key=lambda kv: (kv[0][0], _angle_key(kv[0][1])))
            if c != 0
        ]
        return cls(tuple(terms))

    def __add__(self, other: DehnTensor) -> DehnTensor:
        return DehnTensor.from_terms(self.terms + other.terms)

    def __neg__(self) -> DehnTensor:
        return DehnTensor.from_terms((t.length, t.angle, -t.multiplicity) for t in self.terms)

    def __sub__(self, other: DehnTensor) -> DehnTensor:
        return self + (-other)

    def __rmul__(self, k: int) -> DehnTensor:
        if not isinstance(k, int):
            return NotImplemented
        return DehnTensor.from_terms((t.length, t.angle, t.multiplicity * k) for t in self.terms)

    @property
    def is_canonical_zero(self) -> bool:
        return not self.terms

    @property
    def has_undetermined(self) -> bool:
        return any(isinstance(t.angle, SymbolicAngle) for t in self.terms)

    def is_zero(self) -> bool:
        """Exact zero test; undefined when symbolic angles remain."""
        merged = merge_with_integer_weights(self)
        if merged.has_undetermined:
            raise DomainError("zero test needs every angle to be known exactly")
        return merged.is_canonical_zero

    def equivalent(self, other: DehnTensor) -> bool:
        return (self - other).is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(t) for t in self.terms).replace("+ -", "- ")


def scale(t: DehnTensor, lam: SurdLength | RationalLike) -> DehnTensor:
    """Multiply every length by a positive real ``lam``."""
    if not isinstance(lam, SurdLength):
        lam = as_fraction(lam)
        if lam <= 0:
            raise DomainError("scale factor must be positive")
        lam = SurdLength(1, lam)
    return DehnTensor.from_terms((t_.length * lam, t_.angle, t_.multiplicity) for t_ in t.terms)


def _rational_gcd(values: list[Fraction]) -> Fraction:
    num = 0
    den = 1
    for v in values:
        num = gcd(num, v.numerator)
        den = lcm(den, v.denominator)
    return Fraction(num, den)


def _merge_group(terms: list[DehnTerm]) -> list[tuple[Fraction, Angle]]:
    """Merge ArgOf terms over one radicand and one field into a single term."""
    if len(terms) == 1:
        return [(terms[0].coefficient, terms[0].angle)]
    vecs = [valuation_vector(t.angle.w) for t in terms]
    if _rank(vecs) == 1:
        # express every angle as a rational multiple of the shortest one
        bi = min(range(len(terms)), key=lambda i: sum(abs(v) for v in vecs[i].values()))
        base, bvec = terms[bi].angle, vecs[bi]
        key0 = next(iter(bvec))
        total = Fraction(0)
        for t, vec in zip(terms, vecs):
            e = Fraction(vec.get(key0, 0), bvec[key0])
            if any(vec.get(k, 0) != e * bvec.get(k, 0) for k in set(vec) | set(bvec)):
                raise InternalConsistencyError("valuation vectors of a rank-one group are not proportional")
            if not is_root_of_unity(t.angle.w ** e.denominator / base.w**e.numerator):
                raise InternalConsistencyError(f"{t.angle} is not {e} times {base} modulo pi*Q")
            total += t.coefficient * e
        return [(total, base)] if total else []
    g = _rational_gcd([t.coefficient for t in terms])
    w = QuadElem(terms[0].angle.w.d, 1)
    for t in terms:
        w = w * t.angle.w ** int(t.coefficient / g)
    return [(g, ArgOf(w))]


def merge_with_integer_weights(t: DehnTensor) -> DehnTensor:
    """Merge, per radicand and per field, terms whose lengths are Q-proportional.

    ``c1*x (x) psi1 + c2*x (x) psi2`` with ``c_i = g*k_i``, k_i coprime
    integers, becomes ``g*x (x) (k1*psi1 + k2*psi2)``; when the angles are
    Q-dependent modulo pi*Q the result is written on one of them instead.
    """
    groups: dict[tuple[int, int], list[DehnTerm]] = defaultdict(list)
    rest: list[DehnTerm] = []
    for term in t.terms:
        if isinstance(term.angle, ArgOf):
            groups[(term.length.m, term.angle.w.d)].append(term)
        else:
            rest.append(term)
    raw: list = list(rest)
    for (m, _), terms in groups.items():
        for c, angle in _merge_group(terms):
            raw.append((SurdLength(m, 1), angle, 1) if c == 1 else (SurdLength(m, abs(c)), angle, 1 if c > 0 else -1))
    return DehnTensor.from_terms(raw)


@dataclass(frozen=True)
class Complexity:
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def __iter__(self) -> Iterator[int]:
        return iter((self.lower, self.upper))


def complexity(t: DehnTensor) -> Complexity:
    """Minimal number of elementary tensors, as an interval when angles are unknown.

    The tensor is ``sum_m sqrt(m) (x) psi_m``; its complexity is the rank of
    the row angles psi_m modulo pi*Q.  Rows touching a symbolic angle only
    widen the upper bound.
    """
    rows: dict[int, dict] = defaultdict(lambda: defaultdict(Fraction))
    symbolic_rows: set[int] = set()
    for term in t.terms:
        if isinstance(term.angle, ArgOf):
            row = rows[term.length.m]
            for k, v in valuation_vector(term.angle.w).items():
                row[k] += term.coefficient * v
        else:
            symbolic_rows.add(term.length.m)
    determined = [dict(r) for m, r in rows.items() if m not in symbolic_rows]
    lower = _rank(determined)
    mixed = [dict(r) for m, r in rows.items() if m in symbolic_rows]
    upper = min(_rank(determined + mixed) + len(symbolic_rows), len(set(rows) | symbolic_rows))
    return Complexity(lower, max(lower, upper))


# -- pyramids -----------------------------------------------------------------


@dataclass(frozen=True)
class PyramidAngles:
    theta: Angle
    phi: Angle


def pyramid_angles(spec: PyramidSpec) -> PyramidAngles:
    """Exact dihedral angles; for rational v the field data gives the same proxies."""
    cos = dihedral_cosines(spec.n, spec.h2)
    theta = angle_from_cos_double(cos.cos_2theta, f"theta_{spec.n}")
    phi = angle_from_cos(cos.cos_phi, f"phi_{spec.n}")
    v = spec.v
    if v is not None and isinstance(theta, ArgOf) and isinstance(phi, ArgOf):
        fd = case_b_field_data(spec.n, v.numerator, v.denominator)
        if theta.w != fd.alpha or phi.w != fd.exp_phi**2:
            raise InternalConsistencyError(f"angle proxies of {spec} disagree with the field data")
    return PyramidAngles(theta, phi)


def pyramid_lengths(spec: PyramidSpec) -> tuple[SurdLength, SurdLength]:
    """``2 sin(pi/n)`` and ``sqrt(1 + h^2)``."""
    return SurdLength.sqrt(4 * TRIG[spec.n].sin2), SurdLength.sqrt(1 + spec.h2)


def dehn_invariant(spec: PyramidSpec, merge: bool = True) -> DehnTensor:
    """``n * (2 sin(pi/n) (x) theta + sqrt(1 + h^2) (x) phi)``."""
    ang = pyramid_angles(spec)
    base_len, lateral = pyramid_lengths(spec)
    t = DehnTensor.from_terms([(base_len, ang.theta, spec.n), (lateral, ang.phi, spec.n)])
    return merge_with_integer_weights(t) if merge else t


def ratio_hypothesis(spec: PyramidSpec, r: RationalLike) -> tuple[tuple[tuple[Fraction, SurdLength], ...], Angle]:
    """The one-term invariant if ``phi = r*theta`` is assumed.

    Returns the length ``n*(2 sin(pi/n) + r sqrt(1+h^2))`` as a sum of surds
    and theta.  Nothing here decides whether the hypothesis holds.
    """
    r = as_fraction(r)
    base_len, lateral = pyramid_lengths(spec)
    summands: dict[int, Fraction] = defaultdict(Fraction)
    summands[base_len.m] += spec.n * base_len.r
    summands[lateral.m] += spec.n * r * lateral.r
    length = tuple((c, SurdLength(m, 1)) for m, c in sorted(summands.items()) if c)
    return length, pyramid_angles(spec).theta


# -- the triviality pipeline ------------------------------------------------------


class Tag(str, enum.Enum):
    CASE_A_HIT = "case_a_hit"
    ONE_ANGLE_RATIONAL = "one_angle_rational"
    V_IRRATIONAL = "v_irrational"
    B_MOD4 = "b_mod4"
    UNITY_CONSTRAINT = "unity_constraint_violated"
    NORM_EQUATION_FAILS = "norm_equation_fails"
    PI_NOT_ROOT_OF_UNITY = "pi_not_root_of_unity"
    HEXAGONAL_UNIT_ELIMINATION = "hexagonal_unit_elimination"
    FLAT_DEGENERATE = "flat_degenerate"
    CASE_B_HIT = "case_b_hit"
    # evidence recorded in verbose mode only
    NORM_EQUATION_MEMBER = "norm_equation_member"
    ADMISSIBLE = "admissible"
    PI_PRODUCT = "pi_product"


TRIVIAL_TAGS = frozenset({Tag.CASE_A_HIT, Tag.CASE_B_HIT})
EVIDENCE_TAGS = frozenset({Tag.NORM_EQUATION_MEMBER, Tag.ADMISSIBLE, Tag.PI_PRODUCT})


@dataclass(frozen=True)
class ChainRecord:
    tag: Tag
    message: str
    value: QuadElem | None = None
    data: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class TrivialityReport:
    spec: PyramidSpec
    verdict: str  # "trivial" | "nontrivial"
    chain: tuple[ChainRecord, ...]
    tensor: DehnTensor | None = None
    complexity: Complexity | None = None

    @property
    def trivial(self) -> bool:
        return self.verdict == "trivial"

    @property
    def decisive(self) -> ChainRecord:
        return next(r for r in self.chain if r.tag not in EVIDENCE_TAGS)


class _Chain:
    def __init__(self, verbose: bool) -> None:
        self.verbose = verbose
        self.records: list[ChainRecord] = []
        self.decided: Tag | None = None

    def evidence(self, tag: Tag, message: str, value: QuadElem | None = None, **data: object) -> None:
        if self.verbose:
            self.records.append(ChainRecord(tag, message, value, tuple((k, str(v)) for k, v in data.items())))

    def obstruct(self, tag: Tag, message: str, value: QuadElem | None = None, **data: object) -> bool:
        """Record a decisive finding; return True when the pipeline may stop."""
        if self.decided is None:
            self.decided = tag
        if self.decided is tag or self.verbose:
            self.records.append(ChainRecord(tag, message, value, tuple((k, str(v)) for k, v in data.items())))
        return not self.verbose


def _case_b_chain(spec: PyramidSpec, a: int, b: int, chain: _Chain) -> None:
    n = spec.n
    try:
        fd = case_b_field_data(n, a, b)
    except DomainError as exc:
        chain.obstruct(Tag.FLAT_DEGENERATE, str(exc))
        return
    adm = admissible_b(n, a, b, fd)
    if not adm.admissible:
        tag = Tag.B_MOD4 if adm.reason is AdmissibilityReason.B_MULTIPLE_OF_4 else Tag.UNITY_CONSTRAINT
        if chain.obstruct(tag, "; ".join(adm.notes), D=fd.D):
            return
    else:
        chain.evidence(Tag.ADMISSIBLE, "; ".join(adm.notes), D=fd.D)
    member = norm_equation_member(n, a, b)
    if member is None:
        if chain.obstruct(Tag.NORM_EQUATION_FAILS, f"({a}, {b}) does not solve the norm equation for n = {n}"):
            return
    elif member.family in (HEX_F1, HEX_F2):
        cert = hexagonal_eliminate(member)
        msg = f"{member}: b = {b} > d + 2 = {cert.d + 2} and b > s = {cert.s}; z/conj(z) would be a unit"
        if chain.obstruct(Tag.HEXAGONAL_UNIT_ELIMINATION, msg, s=cert.s, d=cert.d):
            return
    else:
        chain.evidence(Tag.NORM_EQUATION_MEMBER, str(member))
    pi = fd.alpha**a * fd.exp_phi**b
    if is_root_of_unity(pi):
        chain.obstruct(Tag.CASE_B_HIT, f"Pi_{n}({a}, {b}) is a root of unity", pi)
    elif member is not None and member.family not in (HEX_F1, HEX_F2):
        chain.obstruct(Tag.PI_NOT_ROOT_OF_UNITY, f"Pi_{n}({a}, {b}) = {pi} is not a root of unity", pi)
    else:
        chain.evidence(Tag.PI_PRODUCT, f"Pi_{n}({a}, {b}) = {pi} is not a root of unity", pi)


def triviality_verdict(spec: PyramidSpec, verbose: bool = False, reading: str = "conway_jones") -> TrivialityReport:
    """Decide whether Dehn(P_n(h)) vanishes, recording why.

    The chain follows the proof: rational angles first, then rationality of
    v, then for v = a/b the admissibility of b, the norm equation and the
    product Pi.  The result is always cross-checked against the exact zero
    test of the tensor itself.
    """
    n = spec.n
    chain = _Chain(verbose)
    cos = dihedral_cosines(n, spec.h2)
    two_theta, phi = _niven_angle(cos.cos_2theta), _niven_angle(cos.cos_phi)
    if two_theta is not None and phi is not None:
        pair = (RationalAngle(two_theta.value / 2), phi)
        if pair not in rational_case_solutions(n, reading):
            raise InternalConsistencyError(f"rational angles {pair} of {spec} missing from the two-cosine solutions")
        chain.obstruct(Tag.CASE_A_HIT, f"theta = {pair[0]}, phi = {pair[1]}")
    elif two_theta is not None or phi is not None:
        which = "theta" if two_theta is not None else "phi"
        chain.obstruct(Tag.ONE_ANGLE_RATIONAL, f"only {which} is a rational multiple of pi; the other term survives")
    else:
        v = height_to_v(n, spec.h2)
        if v is None:
            chain.obstruct(
                Tag.V_IRRATIONAL,
                f"sin(pi/{n}) / sqrt(1 + h^2) is irrational; both angles are irrational",
                cos_2theta=cos.cos_2theta,
                cos_phi=cos.cos_phi,
            )
        else:
            _case_b_chain(spec, v.numerator, v.denominator, chain)
    tensor = dehn_invariant(spec)
    verdict = "trivial" if chain.decided in TRIVIAL_TAGS else "nontrivial"
    if tensor.is_zero() != (verdict == "trivial"):
        raise InternalConsistencyError(f"pipeline verdict {verdict} disagrees with the tensor zero test for {spec}")
    return TrivialityReport(spec, verdict, tuple(chain.records), tensor, complexity(tensor))


def height_grid(bound: int) -> list[Fraction]:
    """Distinct rationals p/q with 1 <= p, q <= bound."""
    return sorted({Fraction(p, q) for p in range(1, bound + 1) for q in range(1, bound + 1)})


def case_b_grid(n: int, b_max: int) -> list[PyramidSpec]:
    """Every v = a/b in lowest terms with b <= b_max and v^2 < sin^2(pi/n)."""
    s2 = TRIG[n].sin2
    return [
        PyramidSpec(n, CaseBRatio(a, b))
        for b in range(2, b_max + 1)
        for a in range(1, b)
        if gcd(a, b) == 1 and Fraction(a * a, b * b) < s2
    ]
