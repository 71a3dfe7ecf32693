"""Verification suites shared by the command line and the acceptance tests."""
from __future__ import annotations

from typing import Optional

from . import perms
from .borel import cup_product, normal_form, schubert_polynomials, transition_matrix
from .heisenberg import classical_limit as heis_classical_limit
from .heisenberg import toda_E, verify_identities
from .polyring import Polynomial, Var, graded_degree, substitute
from .qchevalley import (chevalley_operator_matrix, classical_limit, degree2_relation_check,
                         flatness_check)
from .qhflag import (divisor_product_chevalley, elementary_classical, flatness_check_presentation,
                     omega_matrix, qelementary, quantize_schubert, quantum_product_chevalley,
                     quantum_product_fl)
from .report import Q_COROOT_CONVENTION, SIGN_CONVENTION, Report
from .roots import RootSystem

SUITES = ("flatness", "degree2", "heisenberg", "quantization", "classical-limit")


def _q_zero(p: Polynomial, n: int) -> Polynomial:
    return substitute(p, {Var("q", j): 0 for j in range(1, n)})


def monk_check(n: int) -> Report:
    """q -> 0 of each omega_i against cup products sigma_{s_i} sigma_w computed from
    Schubert polynomials."""
    report = Report("classical-limit", f"Fl_{n}", conventions=[Q_COROOT_CONVENTION])
    rs = perms.type_a(n)
    for i in range(1, n):
        lim = classical_limit(chevalley_operator_matrix(rs, i), n - 1)
        s_i = perms.from_word([i], n)
        for w in perms.all_perms(n):
            report.checks += 1
            cup = cup_product(s_i, w, n).schubert_coeffs
            col = {perms.weyl_to_perm(v, n): p for v, p in lim.columns[perms.perm_to_weyl(w)].items()}
            for v in set(cup) | set(col):
                a = col.get(v, Polynomial())
                b = cup.get(v, 0)
                if a != b:
                    report.fail(family="monk", i=i, row=perms.perm_str(v), col=perms.perm_str(w),
                                lhs=a, rhs=b)
    return report


def classical_limit_suite(n: int) -> Report:
    report = monk_check(n)
    report.target = f"Fl_{n}"
    report.conventions.append(SIGN_CONVENTION)
    for k in range(1, n + 1):
        for i in range(k + 1):
            report.checks += 1
            e = qelementary(i, k)
            if _q_zero(e, k) != elementary_classical(i, k):
                report.fail(family="qelementary", i=i, k=k, lhs=_q_zero(e, k), rhs=elementary_classical(i, k))
            if k == n:
                continue  # P_n = 0 there
            report.checks += 1
            if heis_classical_limit(toda_E(i, k, n)) != e:
                report.fail(family="toda", i=i, k=k, lhs=heis_classical_limit(toda_E(i, k, n)), rhs=e)
    return report


def quantization_suite(n: int, full_products: Optional[bool] = None) -> Report:
    """Flatness of the presentation matrices plus agreement of the presentation
    product with the quantum Chevalley operators.  All n!^2 products are compared
    only for n <= 4 unless ``full_products`` says otherwise."""
    if full_products is None:
        full_products = n <= 4
    report = flatness_check_presentation(n)
    report.conventions.append(Q_COROOT_CONVENTION)
    ws = perms.all_perms(n)
    schub = schubert_polynomials(n)
    for w in ws:
        report.checks += 1
        g = quantize_schubert(w, n)
        if normal_form(_q_zero(g, n), n) != normal_form(schub[w], n):
            report.fail(family="giambelli-limit", w=perms.perm_str(w), lhs=g, rhs=schub[w])
        gd = graded_degree(g)
        if not gd.homogeneous or gd.degree != 2 * perms.length(w):
            report.fail(family="giambelli-degree", w=perms.perm_str(w), lhs=gd.degree, rhs=2 * perms.length(w))
    for i in range(1, n):
        s_i = perms.from_word([i], n)
        for v in ws:
            report.checks += 1
            a, b = quantum_product_fl(s_i, v, n), divisor_product_chevalley(i, v, n)
            if a != b:
                report.fail(family="divisor-products", i=i, v=perms.perm_str(v), lhs=_vtext(a), rhs=_vtext(b))
    if full_products:
        for u in ws:
            for v in ws:
                report.checks += 1
                a = quantum_product_fl(u, v, n)
                if a != quantum_product_chevalley(u, v, n):
                    report.fail(family="full-products", u=perms.perm_str(u), v=perms.perm_str(v),
                                lhs=_vtext(a), rhs=_vtext(quantum_product_chevalley(u, v, n)))
                if not all(p.coefficients_are_nonnegative_integers() for p in a.values()):
                    report.fail(family="positivity", u=perms.perm_str(u), v=perms.perm_str(v), lhs=_vtext(a))
    report.checks += n - 1
    for k in range(1, n):
        for where in omega_vs_chevalley(k, n):
            report.fail(family="omega-vs-chevalley", k=k, **where)
    return report


def omega_vs_chevalley(k: int, n: int):
    """Omega_k must be minus the Chevalley matrix of sigma_{s_k} after the change of
    basis e_I = sum_w T[I][w] sigma_w.  Yields mismatches."""
    idx, ws, rows = transition_matrix(n)
    om = omega_matrix(k, n)
    chev = chevalley_operator_matrix(perms.type_a(n), k)
    as_weyl = [perms.perm_to_weyl(w) for w in ws]
    for r, I in enumerate(idx):
        # -sigma_{s_k} o e_I, in the Schubert basis
        lhs = {}
        for c, w in zip(rows[r], as_weyl):
            if c:
                for v, p in chev.columns[w].items():
                    lhs[v] = lhs.get(v, Polynomial()) - p * c
        rhs = {}
        pos = {J: t for t, J in enumerate(idx)}
        for L, p in om.columns[I].items():
            for c, w in zip(rows[pos[L]], as_weyl):
                if c:
                    rhs[w] = rhs.get(w, Polynomial()) + p * c
        for v in set(lhs) | set(rhs):
            if lhs.get(v, Polynomial()) != rhs.get(v, Polynomial()):
                yield {"col": str(I), "row": repr(v), "lhs": lhs.get(v), "rhs": rhs.get(v)}


def _vtext(vec) -> dict:
    return {perms.perm_str(w): p.to_text() for w, p in vec.items()}


def run_suite(suite: str, rs: Optional[RootSystem] = None, n: Optional[int] = None,
              name: str = "") -> Report:
    """Run one named suite on a root system (``rs``) or on Fl_n (``n``)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if suite in ("flatness", "degree2"):
        if rs is None:
            if n is None:
                raise ValueError(f"suite {suite} needs a type or n")
            rs, name = perms.type_a(n), name or f"A{n - 1}"
        check = flatness_check if suite == "flatness" else degree2_relation_check
        report = check(rs, name)
        if suite == "flatness" and n is not None and n >= 2:
            report.merge(flatness_check_presentation(n), "presentation")
        return report
    if n is None:
        raise ValueError(f"suite {suite} is defined for Fl_n; pass n")
    if suite == "heisenberg":
        return verify_identities(n)
    if suite == "quantization":
        return quantization_suite(n)
    return classical_limit_suite(n)
