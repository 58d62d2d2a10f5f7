"""Acceptance gate: one PASS/FAIL line per criterion, each with its time budget.

Run under pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from symdehn.crystal import p5_report, verify_gluing_relations  # noqa: E402
from symdehn.cyclo import RationalAngle, oracle_two_cosine  # noqa: E402
from symdehn.dehn import case_b_grid, height_grid, triviality_verdict  # noqa: E402
from symdehn.diophantine import oracle_norm_equation, solve_prop10  # noqa: E402
from symdehn.exactnum import QuadElem, TowerElem  # noqa: E402
from symdehn.pyramid import PyramidSpec, case_b_field_data, eq4_coefficients, pi_product  # noqa: E402


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    seconds: float
    budget: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number}: {status}  {self.title} ({self.seconds:.2f} s, budget {self.budget:g} s){'  ' + self.detail if self.detail else ''}"


RESULTS: dict[int, Outcome] = {}


def _q(d, x, y, den):
    return QuadElem(d, Fraction(x, den), Fraction(y, den))


def c1_eq13():
    expected = {
        (1, 2): _q(-2, -1, 2, 3) ** 3,
        (1, 3): _q(-7, 87, 91, 256),
        (3, 5): _q(-7, -3617721, 802165, 4194304),
    }
    bad = [f"Pi_4{ab} = {pi_product(4, *ab)}" for ab, want in expected.items() if pi_product(4, *ab) != want]
    # ((-1 + 2i sqrt2)/3)^3 = (23 - 10 i sqrt2)/27 written out
    if expected[(1, 2)] != _q(-2, 23, -10, 27):
        bad.append("cube expansion")
    return not bad, "; ".join(bad)


def c2_eq16():
    f3 = case_b_field_data(3, 1, 2)
    checks = {
        "exp(i phi_3)": f3.exp_phi == _q(-2, 1, 2, 3),
        "Pi_3(1,2)": pi_product(3, 1, 2) == _q(-2, 1, 2, 3) ** 4,
        "Pi_6(1,3)": pi_product(6, 1, 3) == _q(-15, -1673, 305, 2**11),
    }
    return all(checks.values()), ", ".join(k for k, ok in checks.items() if not ok)


def c3_prop10():
    closed, oracle = solve_prop10(64), oracle_norm_equation(64)
    small = {s.pair for s in closed if s.b <= 10}
    ok = closed == oracle and small == {(1, 2), (1, 3), (3, 5), (7, 9)}
    return ok, f"{len(closed)} solutions for b <= 64, those with b <= 10: {sorted(small)}"


def c4_theorem1():
    fails = []
    for n in (3, 4, 6):
        trivial = [h for h in height_grid(50) if triviality_verdict(PyramidSpec.from_h2(n, h)).trivial]
        if trivial != ([Fraction(1, 2)] if n == 4 else []):
            fails.append(f"n={n} heights {trivial}")
        hits = [str(s) for s in case_b_grid(n, 64) if triviality_verdict(s).trivial]
        if hits:
            fails.append(f"n={n} ratios {hits}")
    return not fails, "; ".join(fails)


def c5_lemma2():
    expected = {4: {(RationalAngle.of(1, 2), RationalAngle.of(2, 3))}, 3: set(), 6: set()}
    got = {n: set(oracle_two_cosine(*eq4_coefficients(n), 120)) for n in (4, 3, 6)}
    return got == expected, "" if got == expected else str(got)


def c6_eq18():
    rec = verify_gluing_relations()
    ok = (
        rec.phi_product == -1
        and rec.coincidence_3
        and rec.coincidence_4
        and rec.relation_1.is_canonical_zero
        and rec.relation_2.is_canonical_zero
    )
    return ok, f"relations: {rec.relation_1}, {rec.relation_2}"


def c7_p5():
    rep = p5_report()
    ok = rep.W == rep.z_numerator * rep.z_numerator / rep.numerator_norm
    ok = ok and rep.W.rel_norm() == 1 and rep.W60 != TowerElem.one()
    return ok, f"|W|^2 = {rep.W_rel_norm}, W^60 = 1: {rep.W60_is_one}"


def c8_properties():
    import test_properties
    from strategies import CASES, PROPERTY_EXAMPLES

    suites = [getattr(test_properties, n) for n in dir(test_properties) if n.startswith("test_")]
    CASES.clear()
    for suite in suites:
        suite()
    short = {n: k for n, k in CASES.items() if k < PROPERTY_EXAMPLES}
    missing = [s.__name__ for s in suites if s.__name__ not in CASES]
    ok = not short and not missing and len(suites) >= 7
    return ok, f"{len(suites)} suites, min cases {min(CASES.values(), default=0)}" + (f", short {short}" if short else "")


CRITERIA = [
    (1, "Pi_4 values", 1.0, c1_eq13),
    (2, "Pi_3 and Pi_6 values", 1.0, c2_eq16),
    (3, "norm equation closed form vs brute force", 10.0, c3_prop10),
    (4, "triviality sweep over heights and ratios", 60.0, c4_theorem1),
    (5, "two-cosine oracle concordance at q_max = 120", 60.0, c5_lemma2),
    (6, "gluing relations reduce to zero", 1.0, c6_eq18),
    (7, "pentagonal pyramid W^60 != 1", 1.0, c7_p5),
    (8, "property suites, >= 500 cases each", 120.0, c8_properties),
]


def evaluate(number: int, title: str, budget: float, fn) -> Outcome:
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # a crash is a failure of the criterion
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if seconds >= budget:
        passed, detail = False, f"over budget; {detail}"
    out = Outcome(number, title, passed, seconds, budget, detail)
    RESULTS[number] = out
    print(out.line())
    return out


@pytest.mark.parametrize("number,title,budget,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, budget, fn):
    out = evaluate(number, title, budget, fn)
    assert out.passed, out.line()


if __name__ == "__main__":
    outcomes = [evaluate(*c) for c in CRITERIA]
    sys.exit(0 if all(o.passed for o in outcomes) else 1)
