"""Quantum Chevalley operators for an arbitrary finite root system.

``sigma_{s_i} o sigma_w`` = classical Monk-type sum over ``l(w s_alpha) = l(w) + 1``
plus quantum terms ``lambda_i(alpha^vee) q^{alpha^vee} sigma_{w s_alpha}`` over
``l(w s_alpha) = l(w) - 2 height(alpha^vee) + 1``.

Vectors are plain dicts ``{WeylElement: Polynomial}`` (Polynomial in q only).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Sequence

from .polyring import Polynomial, Var, const, graded_degree, q, q_partial, substitute
from .report import Q_COROOT_CONVENTION, Report
from .roots import RootSystem, WeylElement, coroot_inner, weyl_group

QSchubertVector = Dict[WeylElement, Polynomial]

__all__ = [
    "QSchubertVector", "OperatorMatrix", "quantum_chevalley", "chevalley_operator_matrix",
    "flatness_check", "degree2_relation_check", "apply_divisor_word", "apply_operator",
    "q_monomial", "vec_add", "vec_scale", "vec_is_homogeneous",
]


def q_monomial(coroot: Sequence[int]) -> Polynomial:
    out = const(1)
    for j, m in enumerate(coroot, start=1):
        if m:
            out = out * q(j) ** m
    return out


def vec_add(a: QSchubertVector, b: QSchubertVector, scale=1) -> QSchubertVector:
    out = dict(a)
    for k, p in b.items():
        s = out.get(k, Polynomial()) + (p * scale if scale != 1 else p)
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vec_scale(a: QSchubertVector, c) -> QSchubertVector:
    return {k: p * c for k, p in a.items() if p * c}


def _chevalley_column(rs: RootSystem, i: int, w: WeylElement) -> QSchubertVector:
    W = weyl_group(rs)
    out: QSchubertVector = {}
    for k, coroot in enumerate(rs.positive_coroots):
        c = coroot[i - 1]
        if not c:
            continue
        v = W.times_reflection(w, k)
        if v.length == w.length + 1:
            term = const(c)
        elif v.length == w.length - 2 * rs.heights[k] + 1:
            term = q_monomial(coroot) * c
        else:
            continue
        out = vec_add(out, {v: term})
    return out


def quantum_chevalley(rs: RootSystem, i: int, w: WeylElement) -> QSchubertVector:
    """``sigma_{s_i} o sigma_w`` in the Schubert basis."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"divisor index {i} out of range for rank {rs.rank}")
    return dict(chevalley_operator_matrix(rs, i).columns[w])


@dataclass
class OperatorMatrix:
    """Sparse |W| x |W| matrix; ``columns[w][v]`` is the (v, w) entry."""
    order: List[WeylElement]
    columns: Dict[WeylElement, Dict[WeylElement, Polynomial]]

    def entry(self, v: WeylElement, w: WeylElement) -> Polynomial:
        return self.columns[w].get(v, Polynomial())

    def __matmul__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        cols = {w: apply_operator(self, col) for w, col in other.columns.items()}
        return OperatorMatrix(self.order, cols)

    def map_entries(self, f) -> "OperatorMatrix":
        cols = {}
        for w, col in self.columns.items():
            new = {v: f(p) for v, p in col.items()}
            cols[w] = {v: p for v, p in new.items() if p}
        return OperatorMatrix(self.order, cols)

    def differences(self, other: "OperatorMatrix"):
        """Yield ``(row, col, self_entry, other_entry)`` wherever the two differ."""
        for w in self.order:
            a, b = self.columns.get(w, {}), other.columns.get(w, {})
            for v in self.order:
                pa, pb = a.get(v, Polynomial()), b.get(v, Polynomial())
                if pa != pb:
                    yield v, w, pa, pb

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return next(self.differences(other), None) is None

    def dense(self) -> List[List[Polynomial]]:
        return [[self.entry(v, w) for w in self.order] for v in self.order]


def apply_operator(m: OperatorMatrix, vec: QSchubertVector) -> QSchubertVector:
    out: Dict[WeylElement, Polynomial] = {}
    for u, p in vec.items():
        for v, e in m.columns[u].items():
            out[v] = out.get(v, Polynomial()) + e * p
    return {v: p for v, p in out.items() if p}


@lru_cache(maxsize=None)
def chevalley_operator_matrix(rs: RootSystem, i: int) -> OperatorMatrix:
    """omega_i: matrix of ``sigma_{s_i} o`` in the Schubert basis."""
    if not 1 <= i <= rs.rank:
        raise IndexError(f"divisor index {i} out of range for rank {rs.rank}")
    W = weyl_group(rs)
    return OperatorMatrix(list(W.elements), {w: _chevalley_column(rs, i, w) for w in W})


def apply_divisor_word(rs: RootSystem, word: Sequence[int], v: QSchubertVector) -> QSchubertVector:
    """``omega_{i_1}(omega_{i_2}(... omega_{i_r}(v)))``."""
    out = dict(v)
    for i in reversed(list(word)):
        out = apply_operator(chevalley_operator_matrix(rs, i), out)
    return out


def vec_is_homogeneous(vec: QSchubertVector, degree: int) -> bool:
    """Every term of ``coeffs[w]`` has degree ``degree - 2 l(w)``."""
    for w, p in vec.items():
        g = graded_degree(p)
        if not g.homogeneous or g.degree != degree - 2 * w.length:
            return False
    return True


def _q_vars(rs: RootSystem) -> Iterable[Var]:
    return [Var("q", j) for j in range(1, rs.rank + 1)]


def classical_limit(m: OperatorMatrix, rank: int) -> OperatorMatrix:
    zero = {Var("q", j): 0 for j in range(1, rank + 1)}
    return m.map_entries(lambda p: substitute(p, zero))


def flatness_check(rs: RootSystem, name: str = "") -> Report:
    """Commutation ``[omega_i, omega_j] = 0`` and closedness
    ``q_i d/dq_i omega_j = q_j d/dq_j omega_i`` for all ``i < j``."""
    report = Report("flatness", name or f"rank {rs.rank}", conventions=[Q_COROOT_CONVENTION])
    omegas = {i: chevalley_operator_matrix(rs, i) for i in range(1, rs.rank + 1)}
    for i, j in combinations(range(1, rs.rank + 1), 2):
        left, right = omegas[i] @ omegas[j], omegas[j] @ omegas[i]
        report.checks += 1
        for v, w, a, b in left.differences(right):
            report.fail(condition="commutation", i=i, j=j, row=repr(v), col=repr(w), lhs=a, rhs=b)
        di = omegas[j].map_entries(lambda p: q_partial(p, i))
        dj = omegas[i].map_entries(lambda p: q_partial(p, j))
        report.checks += 1
        for v, w, a, b in di.differences(dj):
            report.fail(condition="closedness", i=i, j=j, row=repr(v), col=repr(w), lhs=a, rhs=b)
    report.details["order"] = len(omegas[1].order)
    return report


def degree2_relation_lhs(rs: RootSystem) -> QSchubertVector:
    W = weyl_group(rs)
    out: QSchubertVector = {}
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            g = coroot_inner(rs, i, j)
            if g:
                out = vec_add(out, quantum_chevalley(rs, i, W.simple(j)), g)
    return out


def degree2_relation_check(rs: RootSystem, name: str = "") -> Report:
    """``sum_ij <a_i^v, a_j^v> sigma_i o sigma_j == sum_i <a_i^v, a_i^v> q_i`` exactly."""
    report = Report("degree2", name or f"rank {rs.rank}", conventions=[Q_COROOT_CONVENTION])
    W = weyl_group(rs)
    lhs = degree2_relation_lhs(rs)
    rhs_poly = Polynomial()
    for i in range(1, rs.rank + 1):
        rhs_poly = rhs_poly + q(i) * coroot_inner(rs, i, i)
    rhs = {W.identity: rhs_poly} if rhs_poly else {}
    report.checks = 1
    for w in W:
        a, b = lhs.get(w, Polynomial()), rhs.get(w, Polynomial())
        if a != b:
            report.fail(row=repr(w), lhs=a, rhs=b)
    return report
