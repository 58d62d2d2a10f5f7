"""The battery of exact reproductions behind ``symdehn verify-paper``.

Each check compares a value computed by the library against a literal taken
from the published displays and reports both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .crystal import p5_report, verify_gluing_relations
from .cyclo import RationalAngle, oracle_two_cosine
from .dehn import case_b_grid, height_grid, triviality_verdict
from .diophantine import (
    hexagonal_eliminate,
    hexagonal_exhaustiveness,
    hexagonal_families,
    oracle_norm_equation,
    solve_prop10,
    triangular_case1,
    triangular_case2,
)
from .exactnum import QuadElem
from .kummer import is_root_of_unity
from .pyramid import PyramidSpec, case_b_field_data, eq4_coefficients, pi_product


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    computed: str
    passed: bool


@dataclass(frozen=True)
class BatteryConfig:
    """Bounds for the heavier checks; the defaults are the published ones."""

    q_max: int = 120
    height_bound: int = 50
    b_max: int = 64
    family_bound: int = 20
    hex_b_max: int = 2000
    skip: frozenset[str] = field(default_factory=frozenset)


def _q(d: int, x: Fraction | int, y: Fraction | int) -> QuadElem:
    return QuadElem(d, Fraction(x), Fraction(y))


def _eq(name: str, expected, computed) -> Check:
    return Check(name, str(expected), str(computed), expected == computed)


def check_eq13() -> list[Check]:
    ephi12 = _q(-2, Fraction(-1, 3), Fraction(2, 3))
    f13, f35 = case_b_field_data(4, 1, 3), case_b_field_data(4, 3, 5)
    return [
        _eq("Pi_4(1,2) = ((-1+2i sqrt2)/3)^3", ephi12**3, pi_product(4, 1, 2)),
        _eq("n=4 v=1/2: exp(2i theta) = exp(i phi)", case_b_field_data(4, 1, 2).alpha, case_b_field_data(4, 1, 2).exp_phi),
        _eq("n=4 v=1/3: exp(i phi)", _q(-7, Fraction(-1, 8), Fraction(3, 8)), f13.exp_phi),
        _eq("n=4 v=1/3: exp(2i theta)", _q(-7, Fraction(-3, 4), Fraction(1, 4)), f13.alpha),
        _eq("Pi_4(1,3)", _q(-7, Fraction(87, 256), Fraction(91, 256)), pi_product(4, 1, 3)),
        _eq("n=4 v=3/5: exp(i phi)", _q(-7, Fraction(-9, 16), Fraction(5, 16)), f35.exp_phi),
        _eq("n=4 v=3/5: exp(2i theta)", _q(-7, Fraction(1, 8), Fraction(3, 8)), f35.alpha),
        _eq("Pi_4(3,5)", _q(-7, Fraction(-3617721, 4194304), Fraction(802165, 4194304)), pi_product(4, 3, 5)),
    ]


def check_eq16_and_hex() -> list[Check]:
    f3 = case_b_field_data(3, 1, 2)
    f6 = case_b_field_data(6, 1, 3)
    p33 = pi_product(3, 3, 5)
    return [
        _eq("n=3 v=1/2: exp(i phi)", _q(-2, Fraction(1, 3), Fraction(2, 3)), f3.exp_phi),
        _eq("Pi_3(1,2) = exp(i phi_3)^4", f3.exp_phi**4, pi_product(3, 1, 2)),
        _eq("n=6 v=1/3: exp(2i theta)", _q(-15, Fraction(-1, 4), Fraction(1, 4)), f6.alpha),
        _eq("n=6 v=1/3: exp(i phi)", _q(-15, Fraction(-11, 16), Fraction(3, 16)), f6.exp_phi),
        _eq("Pi_6(1,3)", _q(-15, Fraction(-1673, 2048), Fraction(305, 2048)), pi_product(6, 1, 3)),
        Check("Pi_3(3,5) lies in Q(i sqrt39), not a root of unity", "d = -39, False", f"d = {p33.d}, {is_root_of_unity(p33)}", p33.d == -39 and not is_root_of_unity(p33)),
    ]


def check_prop10(b_max: int = 64) -> list[Check]:
    closed, oracle = solve_prop10(b_max), oracle_norm_equation(b_max)
    small = sorted(s.pair for s in closed if s.b <= 10)
    return [
        Check(f"Prop10 closed form == brute force (b <= {b_max})", "True", str(closed == oracle), closed == oracle),
        _eq("Prop10 solutions with b <= 10", [(1, 2), (1, 3), (3, 5), (7, 9)], small),
    ]


def check_triangular() -> list[Check]:
    return [
        _eq("triangular case a != 0 mod 3", [(1, 2)], sorted(s.pair for s in triangular_case1())),
        _eq("triangular case a = 0 mod 3", [(3, 5)], sorted(s.pair for s in triangular_case2())),
    ]


def check_hexagonal(bound: int = 20, b_max: int = 2000) -> list[Check]:
    members = hexagonal_families(bound, bound)
    certs = [hexagonal_eliminate(m) for m in members]
    only_brute, only_fam = hexagonal_exhaustiveness(b_max)
    return [
        Check(
            f"hexagonal families s, d <= {bound}: b > d + 2 and b > s",
            f"{len(members)} valid certificates",
            f"{sum(c.valid for c in certs)} valid certificates",
            all(c.valid for c in certs) and len(certs) > 0,
        ),
        Check(
            f"hexagonal families exhaust b^2 - a^2 = 2^K 3^L (b <= {b_max})",
            "no pair missed on either side",
            f"brute-only {sorted(only_brute)}, families-only {sorted(only_fam)}",
            not only_brute and not only_fam,
        ),
    ]


def check_lemma2_oracle(q_max: int = 120) -> list[Check]:
    expected = {4: {(RationalAngle.of(1, 2), RationalAngle.of(2, 3))}, 3: set(), 6: set()}
    out = []
    for n in (4, 3, 6):
        A, B, C = eq4_coefficients(n)
        got = oracle_two_cosine(A, B, C, q_max)
        fmt = lambda s: sorted(f"({x}, {y})" for x, y in s)  # noqa: E731
        out.append(Check(f"n={n}: rational (2 theta, phi) up to q = {q_max}", str(fmt(expected[n])), str(fmt(got)), set(got) == expected[n]))
    return out


def check_theorem1(height_bound: int = 50, b_max: int = 64) -> list[Check]:
    out = []
    for n in (4, 3, 6):
        triv = [h for h in height_grid(height_bound) if triviality_verdict(PyramidSpec.from_h2(n, h)).trivial]
        expected = [Fraction(1, 2)] if n == 4 else []
        out.append(_eq(f"n={n}: trivial heights h^2 = p/q, p, q <= {height_bound}", [str(h) for h in expected], [str(h) for h in triv]))
        hits = [str(s) for s in case_b_grid(n, b_max) if triviality_verdict(s).trivial]
        out.append(_eq(f"n={n}: trivial ratios v = a/b, b <= {b_max}", [], hits))
    return out


def check_eq18() -> list[Check]:
    rec = verify_gluing_relations()
    return [
        _eq("exp(i phi_3) * exp(i phi_4)", -1, rec.phi_product),
        _eq("sqrt3 Dehn(P_4(1)) + sqrt2 Dehn(P_3(sqrt2))", "0", str(rec.relation_1)),
        _eq("3 sqrt2 Dehn(P_4(1)) + 2 sqrt3 Dehn(P_3(sqrt2))", "0", str(rec.relation_2)),
        _eq("3 Dehn(K') + 2 Dehn(T')", "0", str(rec.crystal)),
    ]


def check_p5() -> list[Check]:
    rep = p5_report()
    return [
        _eq("|numerator of Z|^2 = 54 (5 - sqrt5)", QuadElem(5, 270, -54), rep.numerator_norm),
        Check("displayed exp(i(phi+theta)) = exp(i phi) exp(i theta)", "True", str(rep.displayed_product_matches), rep.displayed_product_matches),
        _eq("|W|^2", 1, rep.W_rel_norm),
        Check("W^60 == 1", "False", str(rep.W60_is_one), not rep.W60_is_one),
    ]


def battery(config: BatteryConfig = BatteryConfig()) -> list[tuple[str, Callable[[], list[Check]]]]:
    groups = [
        ("eq13", check_eq13),
        ("eq16", check_eq16_and_hex),
        ("prop10", lambda: check_prop10(config.b_max)),
        ("triangular", check_triangular),
        ("hexagonal", lambda: check_hexagonal(config.family_bound, config.hex_b_max)),
        ("lemma2", lambda: check_lemma2_oracle(config.q_max)),
        ("theorem1", lambda: check_theorem1(config.height_bound, config.b_max)),
        ("eq18", check_eq18),
        ("p5", check_p5),
    ]
    return [(name, fn) for name, fn in groups if name not in config.skip]


def run_battery(config: BatteryConfig = BatteryConfig()) -> list[Check]:
    out: list[Check] = []
    for group, fn in battery(config):
        try:
            out.extend(fn())
        except Exception as exc:  # a crash is a named failure, not an abort
            out.append(Check(group, "no exception", f"{type(exc).__name__}: {exc}", False))
    return out
