"""The Heisenberg algebra D over Q[h] on Q_1..Q_l, P_1..P_l with

    [Q_i, Q_j] = [P_i, P_j] = 0,   [P_i, Q_j] = delta_ij h Q_j,

its Toda elements, and its action on quantum cohomology of Fl_n.

Elements are stored normal ordered: every monomial is Q^I P^J h^m.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Mapping, Optional, Tuple

from . import perms
from .perms import Perm
from .polyring import Polynomial, Var, const, hbar, q, q_partial, substitute, x
from .qchevalley import apply_operator, chevalley_operator_matrix
from .report import SIGN_CONVENTION, Report
from .roots import RootSystem, coroot_inner

__all__ = [
    "HeisenbergElement", "heis_multiply", "commutator", "toda_E", "toda_X", "toda_D1",
    "DModuleState", "dmodule_action", "verify_identities", "classical_limit",
]

HMonomial = Tuple[Tuple[int, ...], Tuple[int, ...], int]


class HeisenbergElement:
    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Optional[Mapping[HMonomial, object]] = None):
        self.rank = rank
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                I, J, m = key
                if len(I) != rank or len(J) != rank:
                    raise ValueError(f"monomial {key} does not match rank {rank}")
                clean[(tuple(I), tuple(J), int(m))] = c
        self.terms: Dict[HMonomial, Fraction] = clean

    # constructors
    @classmethod
    def constant(cls, rank: int, c=1) -> "HeisenbergElement":
        return cls(rank, {((0,) * rank, (0,) * rank, 0): c})

    @classmethod
    def Q(cls, i: int, rank: int) -> "HeisenbergElement":
        return cls(rank, {(_unit(i, rank), (0,) * rank, 0): 1})

    @classmethod
    def P(cls, i: int, rank: int) -> "HeisenbergElement":
        """P_i; by convention P_0 = P_{rank+1} = 0."""
        if i < 1 or i > rank:
            return cls(rank)
        return cls(rank, {((0,) * rank, _unit(i, rank), 0): 1})

    @classmethod
    def hbar(cls, rank: int) -> "HeisenbergElement":
        return cls(rank, {((0,) * rank, (0,) * rank, 1): 1})

    # arithmetic
    def _coerce(self, other) -> "HeisenbergElement":
        if isinstance(other, HeisenbergElement):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        return HeisenbergElement.constant(self.rank, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return HeisenbergElement(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return HeisenbergElement(self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return heis_multiply(self, self._coerce(other))

    def __rmul__(self, other):
        return heis_multiply(self._coerce(other), self)

    def __pow__(self, e: int):
        out = HeisenbergElement.constant(self.rank)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = HeisenbergElement.constant(self.rank, other)
        if not isinstance(other, HeisenbergElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degree_report(self):
        """Set of graded degrees 4|I| + 2|J| + 2m over the terms."""
        return {4 * sum(I) + 2 * sum(J) + 2 * m for I, J, m in self.terms}

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degs = self.degree_report()
        if not degs:
            return True
        return len(degs) == 1 and (degree is None or degs == {degree})

    def mixes_q_and_p(self) -> bool:
        """True if some monomial contains both Q_j and P_j for one j."""
        return any(a and b for I, J, _ in self.terms for a, b in zip(I, J))

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (I, J, m), c in sorted(self.terms.items(), key=_text_key):
            factors = []
            if m:
                factors.append("h" if m == 1 else f"h^{m}")
            for sym, exps in (("Q", I), ("P", J)):
                for idx, e in enumerate(exps, start=1):
                    if e:
                        factors.append(f"{sym}{idx}" if e == 1 else f"{sym}{idx}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                txt = str(mag)
            elif mag == 1:
                txt = body
            else:
                txt = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", txt))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, txt in parts[1:]:
            out += f" {sign} {txt}"
        return out

    def __repr__(self):
        return f"HeisenbergElement({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


def _text_key(item):
    (I, J, m), _ = item
    return (-(4 * sum(I) + 2 * sum(J) + 2 * m), [-e for e in I], [-e for e in J], -m)


def _unit(i: int, rank: int) -> Tuple[int, ...]:
    if not 1 <= i <= rank:
        raise IndexError(f"index {i} out of range for rank {rank}")
    return tuple(int(j == i - 1) for j in range(rank))


@lru_cache(maxsize=4096)
def _reorder(a: int, b: int) -> Tuple[Tuple[int, Fraction], ...]:
    """P^a Q^b = Q^b (P + b h)^a = sum_c C(a,c) (b h)^(a-c) Q^b P^c; returns (c, coeff of h^(a-c))."""
    return tuple((c, Fraction(comb(a, c) * b ** (a - c))) for c in range(a + 1) if b or c == a)


def _mono_product(x1: HMonomial, x2: HMonomial) -> Dict[HMonomial, Fraction]:
    I, J, m = x1
    K, L, r = x2
    partial = {((), (), 0): Fraction(1)}
    for a, b in zip(J, K):
        nxt = {}
        for (qs, ps, h), c in partial.items():
            for pc, coeff in _reorder(a, b):
                key = (qs, ps + (pc,), h + a - pc)
                nxt[key] = nxt.get(key, 0) + c * coeff
        partial = nxt
    out = {}
    QK = tuple(i + k for i, k in zip(I, K))
    for (_, ps, h), c in partial.items():
        key = (QK, tuple(p + l for p, l in zip(ps, L)), m + r + h)
        out[key] = out.get(key, 0) + c
    return out


def heis_multiply(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    out: Dict[HMonomial, Fraction] = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            for k, c in _mono_product(ka, kb).items():
                out[k] = out.get(k, 0) + ca * cb * c
    return HeisenbergElement(a.rank, out)


def commutator(a: HeisenbergElement, b: HeisenbergElement) -> HeisenbergElement:
    return a * b - b * a


# -- Toda elements ------------------------------------------------------------------

def toda_X(k: int, n: int) -> HeisenbergElement:
    """X_k = P_{k-1} - P_k with P_0 = P_n = 0."""
    rank = n - 1
    return HeisenbergElement.P(k - 1, rank) - HeisenbergElement.P(k, rank)


@lru_cache(maxsize=None)
def _toda_E(i: int, k: int, n: int) -> HeisenbergElement:
    rank = n - 1
    if i < 0 or i > k:
        return HeisenbergElement(rank)
    if i == 0:
        return HeisenbergElement.constant(rank)
    prev = _toda_E(i - 1, k - 1, n)
    X = toda_X(k, n)
    # X_k involves P_{k-1}, P_k only; E^{k-1} has no Q_{k-1} or Q_k, so the
    # product is a plain concatenation and no reordering is ever needed
    _assert_no_reordering(X, prev)
    out = _toda_E(i, k - 1, n) + X * prev
    if k >= 2:
        low = _toda_E(i - 2, k - 2, n)
        out = out + HeisenbergElement.Q(k - 1, rank) * low
    if out.mixes_q_and_p() or any(m for _, _, m in out.terms):
        raise AssertionError(f"E_{i}^{k} contains a P_j Q_j pair or an h term")
    return out


def _assert_no_reordering(left: HeisenbergElement, right: HeisenbergElement) -> None:
    ps = {j for _, J, _ in left.terms for j, e in enumerate(J) if e}
    qs = {j for I, _, _ in right.terms for j, e in enumerate(I) if e}
    if ps & qs:
        raise AssertionError("Toda recurrence would need to reorder P past Q")


def toda_E(i: int, k: int, n: int) -> HeisenbergElement:
    """Toda element E_i^k in the rank n-1 algebra (P_n = 0)."""
    if not 0 <= i <= k <= n:
        raise ValueError(f"need 0 <= i <= k <= n, got i={i}, k={k}, n={n}")
    if n < 2:
        raise ValueError("need n >= 2")
    return _toda_E(i, k, n)


def toda_D1(rs: RootSystem) -> HeisenbergElement:
    """D_1 = sum <a_i^v, a_j^v> P_i P_j - sum <a_i^v, a_i^v> Q_i."""
    l = rs.rank
    out = HeisenbergElement(l)
    for i in range(1, l + 1):
        for j in range(1, l + 1):
            g = coroot_inner(rs, i, j)
            if g:
                out = out + HeisenbergElement.P(i, l) * HeisenbergElement.P(j, l) * g
        out = out - HeisenbergElement.Q(i, l) * coroot_inner(rs, i, i)
    return out


def classical_limit(D: HeisenbergElement) -> Polynomial:
    """h -> 0, Q_k -> q_k, P_k -> lambda_k = -(x_1 + ... + x_k)."""
    out = Polynomial()
    lams = [Polynomial()]
    for k in range(1, D.rank + 1):
        lams.append(lams[-1] - x(k))
    for (I, J, m), c in D.terms.items():
        if m:
            continue
        t = const(c)
        for k, e in enumerate(I, start=1):
            if e:
                t = t * q(k) ** e
        for k, e in enumerate(J, start=1):
            if e:
                t = t * lams[k] ** e
        out = out + t
    return out


# -- D-module action -----------------------------------------------------------------

DModuleState = Dict[Perm, Polynomial]


def _p_action(i: int, n: int, a: DModuleState) -> DModuleState:
    # P_i.a = sigma_{s_i} o a + h q_i d/dq_i a
    m = chevalley_operator_matrix(perms.type_a(n), i)
    wa = {perms.perm_to_weyl(w): p for w, p in a.items()}
    out = {perms.weyl_to_perm(w, n): p for w, p in apply_operator(m, wa).items()}
    h = hbar()
    for w, p in a.items():
        d = q_partial(p, i)
        if d:
            s = out.get(w, Polynomial()) + h * d
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    return out


def dmodule_action(D: HeisenbergElement, a: DModuleState, n: int) -> DModuleState:
    """Act with D on a (a map permutation -> polynomial in q, h)."""
    if D.rank != n - 1:
        raise ValueError(f"element has rank {D.rank}, expected {n - 1}")
    out: DModuleState = {}
    cache: Dict[Tuple[int, ...], DModuleState] = {(0,) * D.rank: dict(a)}

    def apply_p(J):
        if J in cache:
            return cache[J]
        k = max(j for j, e in enumerate(J) if e)
        smaller = J[:k] + (J[k] - 1,) + J[k + 1:]
        cache[J] = _p_action(k + 1, n, apply_p(smaller))
        return cache[J]

    for (I, J, m), c in D.terms.items():
        coef = const(c) * hbar() ** m
        for k, e in enumerate(I, start=1):
            if e:
                coef = coef * q(k) ** e
        for w, p in apply_p(J).items():
            s = out.get(w, Polynomial()) + coef * p
            if s:
                out[w] = s
            else:
                out.pop(w, None)
    order = {w: r for r, w in enumerate(perms.all_perms(n))}
    return {w: out[w] for w in sorted(out, key=order.get)}


# -- identity battery -------------------------------------------------------------------

def verify_identities(n: int) -> Report:
    """Exact checks of the Toda commutation identities, the noncommutative straightening
    identity, D_1-commutation and annihilation of 1, at rank n-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    report = Report("heisenberg", f"n={n}", conventions=[SIGN_CONVENTION])
    E = lambda i, k: _toda_E(i, k, n) if 0 <= k <= n else HeisenbergElement(n - 1)
    Q = lambda k: HeisenbergElement.Q(k, n - 1)
    families = {}

    def check(family, lhs, rhs, **where):
        families[family] = families.get(family, 0) + 1
        report.checks += 1
        if lhs != rhs:
            report.fail(family=family, lhs=lhs.to_text(), rhs=rhs.to_text() if isinstance(rhs, HeisenbergElement) else rhs, **where)

    zero = HeisenbergElement(n - 1)
    for k in range(n + 1):
        for i in range(k + 1):
            for j in range(i + 1, k + 1):
                check("commuting", commutator(E(i, k), E(j, k)), zero, i=i, j=j, k=k)
    for k in range(n):
        for i in range(k + 1):
            for j in range(k + 1):
                check("shifted-commutator", commutator(E(j + 1, k + 1), E(i, k)),
                      commutator(E(i + 1, k + 1), E(j, k)), i=i, j=j, k=k)
    for k in range(1, n + 1):
        for l in range(k):
            for j in range(l + 1):
                check("x-q-commute", commutator(toda_X(k, n), E(j, l)), zero, k=k, l=l, j=j)
                if k <= n - 1:
                    check("x-q-commute", commutator(Q(k), E(j, l)), zero, k=k, l=l, j=j, generator="Q")
    for k in range(n):
        qk = Q(k) if 1 <= k <= n - 1 else zero
        for i in range(k + 1):
            for j in range(k + 1):
                lhs = E(i, k) * E(j + 1, k + 1) + E(i + 1, k) * E(j, k) + qk * E(i - 1, k - 1) * E(j, k)
                rhs = E(j, k) * E(i + 1, k + 1) + E(j + 1, k) * E(i, k) + qk * E(j - 1, k - 1) * E(i, k)
                check("straightening", lhs, rhs, i=i, j=j, k=k)
    D1 = toda_D1(perms.type_a(n))
    for i in range(n + 1):
        check("d1-commute", commutator(D1, E(i, n)), zero, i=i)
    one = {perms.identity(n): const(1)}
    for i in range(1, n + 1):
        res = dmodule_action(E(i, n), one, n)
        families["annihilation"] = families.get("annihilation", 0) + 1
        report.checks += 1
        if res:
            report.fail(family="annihilation", i=i,
                        lhs={perms.perm_str(w): p.to_text() for w, p in res.items()}, rhs="0")
    report.details["families"] = families
    return report
