"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line with its runtime and budget.
Run under pytest (``pytest tests/test_acceptance.py -v``) or directly
(``python tests/test_acceptance.py``) for just the summary lines.
"""
import json
import sys
import time
from pathlib import Path

import pytest

from qflag import perms
from qflag.borel import std_indices
from qflag.heisenberg import dmodule_action, toda_E, verify_identities
from qflag.polyring import Polynomial, const, q
from qflag.qchevalley import degree2_relation_check, flatness_check
from qflag.qhflag import (divisor_product_chevalley, expand_emono, flatness_check_presentation,
                          quantize_schubert, quantum_normal_form, quantum_product_chevalley,
                          quantum_product_fl, std_to_emono, std_vector_to_poly, straighten)
from qflag.roots import root_system
from qflag.suites import monk_check

FIXTURES = Path(__file__).parent / "fixtures" / "derived.json"


def _all_pass(reports):
    bad = [f"{r.target}: {r.failures[:2]}" for r in reports if not r.passed]
    return not bad, "; ".join(bad) or f"{sum(r.checks for r in reports)} checks"


def degree_two_relation():
    return _all_pass([degree2_relation_check(root_system(t), t)
                      for t in ("A1", "A2", "A3", "A4", "B2", "G2")])


def dubrovin_flatness():
    return _all_pass([flatness_check(root_system(t), t) for t in ("A2", "A3", "B2", "G2", "A4")])


def chevalley_classical_limit():
    return _all_pass([monk_check(n) for n in (2, 3, 4)])


def presentation_flatness_and_divisors():
    reports = [flatness_check_presentation(n) for n in (3, 4)]
    ok, detail = _all_pass(reports)
    bad = []
    count = 0
    for n in (3, 4):
        for i in range(1, n):
            s_i = perms.from_word([i], n)
            for v in perms.all_perms(n):
                count += 1
                if quantum_product_fl(s_i, v, n) != divisor_product_chevalley(i, v, n):
                    bad.append((n, i, perms.perm_str(v)))
    return ok and not bad, f"{detail}; {count} divisor products, mismatches {bad[:3]}"


def heisenberg_battery():
    reports = [verify_identities(n) for n in (2, 3, 4)]
    ok, detail = _all_pass(reports)
    fams = set().union(*(r.details["families"] for r in reports))
    need = {"commuting", "shifted-commutator", "x-q-commute", "straightening", "d1-commute"}
    return ok and need <= fams, detail


def annihilation():
    bad, count = [], 0
    for n in (2, 3, 4):
        one = {perms.identity(n): const(1)}
        for i in range(1, n + 1):
            count += 1
            if dmodule_action(toda_E(i, n, n), one, n):
                bad.append((n, i))
    return not bad, f"{count} elements, nonzero {bad}"


def straightening_vs_groebner():
    n = 3
    idx = std_indices(n)
    bad, count = [], 0
    for I in idx:
        for J in idx:
            count += 1
            e = std_to_emono(I) + std_to_emono(J)
            lhs = std_vector_to_poly(straighten({e: 1}, n))
            rhs = expand_emono(tuple(sorted(e)))
            if quantum_normal_form(lhs, n) != quantum_normal_form(rhs, n):
                bad.append((I, J))
    return not bad, f"{count} ordered pairs of {len(idx)} standard monomials, mismatches {bad[:3]}"


def spot_values():
    fx = json.loads(FIXTURES.read_text())
    P = Polynomial.parse
    checks = {
        "Fl3 quantize 312": quantize_schubert((3, 1, 2), 3) == P("x1^2 - q1")
        == P(fx["fl3_qgiambelli"]["312"]),
        "Fl3 s1 * w0": quantum_product_fl((2, 1, 3), (3, 2, 1), 3)
        == {(2, 3, 1): q(1), (1, 2, 3): q(1) * q(2)}
        == {perms.parse_perm(w, 3): P(t) for w, t in fx["fl3_quantum_products"]["213*321"].items()},
        "Fl2 s * s": quantum_product_fl((2, 1), (2, 1), 2) == {(1, 2): q(1)}
        == quantum_product_chevalley((2, 1), (2, 1), 2),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"{len(checks)} values, wrong {bad}"


def positivity():
    bad, count = [], 0
    for n in (3, 4):
        ws = perms.all_perms(n)
        for u in ws:
            for v in ws:
                count += 1
                for p in quantum_product_fl(u, v, n).values():
                    if not p.coefficients_are_nonnegative_integers():
                        bad.append((n, perms.perm_str(u), perms.perm_str(v)))
    return not bad, f"{count} products, negative {bad[:3]}"


# (number, label, function, time budget in seconds)
CRITERIA = [
    (1, "degree-two relation A1-A4, B2, G2", degree_two_relation, 10),
    (2, "flatness A2, A3, B2, G2, A4", dubrovin_flatness, 300),
    (3, "quantum Chevalley q->0 equals Monk rule, n <= 4", chevalley_classical_limit, 60),
    (4, "presentation flatness and divisor products, n = 3, 4", presentation_flatness_and_divisors, 120),
    (5, "Heisenberg identity battery, n <= 4", heisenberg_battery, 120),
    (6, "annihilation of 1 by E_i^n, n = 2, 3, 4", annihilation, 60),
    (7, "straightening equals Groebner normal form, n = 3", straightening_vs_groebner, 60),
    (8, "spot values against frozen fixtures", spot_values, 30),
    (9, "nonnegative integer structure constants, n = 3, 4", positivity, 120),
]


def evaluate(number, label, func, budget):
    start = time.perf_counter()
    ok, detail = func()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {label} [{elapsed:.2f}s / {budget}s] {detail}"
    return ok, line


@pytest.mark.parametrize("number, label, func, budget", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, label, func, budget, capsys):
    ok, line = evaluate(number, label, func, budget)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
