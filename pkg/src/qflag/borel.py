"""Classical cohomology of Fl_n in the Borel presentation Q[x_1..x_n]/I_n.

Schubert polynomials come from divided differences, normal forms from the
Groebner basis ``{h_{n-k+1}(x_1, ..., x_k)}`` of the symmetric ideal (lex with
x_n > ... > x_1; the leading terms x_k^(n-k+1) are pairwise coprime), and
Schubert expansions from triangular elimination on code monomials.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, List, Sequence, Tuple

from . import perms
from .linalg import inverse
from .perms import Perm
from .polyring import Monomial, Polynomial, Var, const, x

__all__ = [
    "MAX_N", "SchubertTable", "CohomologyClass", "ConsistencyError",
    "divided_difference", "schubert_polynomials", "normal_form", "expand_schubert",
    "cup_product", "std_indices", "elementary", "std_elementary_monomial",
    "transition_matrix", "schubert_in_std_basis",
]

MAX_N = 6


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, never bad input."""


def _check_n(n: int) -> None:
    if not 2 <= n <= MAX_N:
        raise ValueError(f"n must satisfy 2 <= n <= {MAX_N}, got {n}")


def _xexp(m: Monomial, k: int) -> int:
    for v, e in m:
        if v.kind == "x" and v.index == k:
            return e
    return 0


def _with_exp(m: Monomial, updates: Dict[Var, int]) -> Monomial:
    d = dict(m)
    for v, e in updates.items():
        if e:
            d[v] = e
        else:
            d.pop(v, None)
    return tuple(sorted(d.items()))


def divided_difference(f: Polynomial, i: int, n: int) -> Polynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"divided difference index {i} out of range for n={n}")
    vi, vj = Var("x", i), Var("x", i + 1)
    out: Dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        d = dict(m)
        a, b = d.get(vi, 0), d.get(vj, 0)
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # (x_i^hi x_j^lo - x_i^lo x_j^hi)/(x_i - x_j) = sum_k x_i^(hi-1-k) x_j^(lo+k)
        for k in range(hi - lo):
            mono = _with_exp(m, {vi: hi - 1 - k, vj: lo + k}) if sign > 0 else \
                _with_exp(m, {vi: lo + k, vj: hi - 1 - k})
            out[mono] = out.get(mono, 0) + sign * c
    return Polynomial(out)


@dataclass(frozen=True)
class SchubertTable:
    n: int
    table: Dict[Perm, Polynomial] = field(compare=False)

    def __getitem__(self, w: Perm) -> Polynomial:
        return self.table[w]

    def __iter__(self):
        return iter(self.table.items())


@lru_cache(maxsize=None)
def schubert_polynomials(n: int) -> SchubertTable:
    """All Schubert polynomials for S_n, by descent from x1^{n-1} x2^{n-2} ... x_{n-1}."""
    _check_n(n)
    top = const(1)
    for k in range(1, n):
        top = top * x(k) ** (n - k)
    table = {perms.longest(n): top}
    layer = [perms.longest(n)]
    while layer:
        nxt = []
        for w in layer:
            for i in range(1, n):
                if w[i - 1] > w[i]:
                    v = perms.times_simple(w, i)
                    if v not in table:
                        table[v] = divided_difference(table[w], i, n)
                        nxt.append(v)
        layer = nxt
    ordered = {w: table[w] for w in perms.all_perms(n)}
    return SchubertTable(n, ordered)


def complete_homogeneous(k: int, variables: Sequence[int]) -> Polynomial:
    out = {}
    for combo in combinations_with_replacement(variables, k):
        m: Dict[Var, int] = {}
        for v in combo:
            m[Var("x", v)] = m.get(Var("x", v), 0) + 1
        out[tuple(sorted(m.items()))] = 1
    return Polynomial(out)


@lru_cache(maxsize=None)
def _groebner_basis(n: int) -> Tuple[Polynomial, ...]:
    return tuple(complete_homogeneous(n - k + 1, range(1, k + 1)) for k in range(1, n + 1))


def normal_form(f: Polynomial, n: int) -> Polynomial:
    """Reduce modulo the ideal generated by nonconstant symmetric polynomials in x_1..x_n.

    Other variables (q, h) are carried along as coefficients.  The result is
    supported on monomials with ``exp(x_k) <= n - k``.
    """
    basis = _groebner_basis(n)
    tails = []
    for k, g in enumerate(basis, start=1):
        lead = ((Var("x", k), n - k + 1),)
        tails.append((k, n - k + 1, g - Polynomial({lead: 1})))
    work = dict(f.terms)
    done: Dict[Monomial, Fraction] = {}
    while work:
        m, c = work.popitem()
        for k, deg, tail in tails:
            e = _xexp(m, k)
            if e >= deg:
                rest = _with_exp(m, {Var("x", k): e - deg})
                # x_k^deg = -tail  (mod the ideal)
                for tm, tc in tail.terms.items():
                    mono = _mono_merge(rest, tm)
                    s = work.get(mono, 0) - c * tc
                    if s:
                        work[mono] = s
                    else:
                        work.pop(mono, None)
                break
        else:
            s = done.get(m, 0) + c
            if s:
                done[m] = s
            else:
                done.pop(m, None)
    return Polynomial(done)


def _mono_merge(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _xvector(m: Monomial, n: int) -> Tuple[int, ...]:
    return tuple(_xexp(m, k) for k in range(1, n + 1))


def leading_monomial(f: Polynomial, n: int) -> Monomial:
    """Lex-leading monomial with x_1 > x_2 > ... > x_n."""
    return max(f.terms, key=lambda m: _xvector(m, n))


def trailing_monomial(f: Polynomial, n: int) -> Monomial:
    """Lex-smallest monomial; for a Schubert polynomial this is x^code(w)."""
    return min(f.terms, key=lambda m: _xvector(m, n))


@dataclass
class CohomologyClass:
    n: int
    schubert_coeffs: Dict[Perm, Fraction]

    def __eq__(self, other):
        if isinstance(other, CohomologyClass):
            return self.n == other.n and self.schubert_coeffs == other.schubert_coeffs
        return NotImplemented

    def to_json(self) -> Dict[str, str]:
        return {perms.perm_str(w): str(c) for w, c in self.schubert_coeffs.items()}


@lru_cache(maxsize=None)
def _trailing_table(n: int) -> Dict[Tuple[int, ...], Tuple[Perm, Polynomial]]:
    lead = {}
    for w, s in schubert_polynomials(n):
        key = _xvector(trailing_monomial(s, n), n)
        if key in lead:
            raise ConsistencyError(f"Schubert polynomials of {lead[key][0]} and {w} share a trailing monomial")
        lead[key] = (w, s)
    return lead


def expand_schubert(f: Polynomial, n: int) -> CohomologyClass:
    """Coefficients of the class of ``f`` (in x_1..x_n) in the Schubert basis."""
    lead = _trailing_table(n)
    r = normal_form(f, n)
    coeffs: Dict[Perm, Fraction] = {}
    # every other term of S_w is lex-larger than x^code(w), so the trailing
    # monomial of r strictly increases
    while r:
        m = trailing_monomial(r, n)
        if any(v.kind != "x" for v, _ in m):
            raise ValueError("expand_schubert expects a polynomial in x variables only")
        key = _xvector(m, n)
        if key not in lead:
            raise ConsistencyError(f"residual monomial {m} has no matching Schubert polynomial")
        w, s = lead[key]
        c = r.terms[m]
        coeffs[w] = coeffs.get(w, 0) + c
        r = r - s * c
    order = {w: k for k, w in enumerate(perms.all_perms(n))}
    return CohomologyClass(n, {w: coeffs[w] for w in sorted(coeffs, key=order.get) if coeffs[w]})


def cup_product(u: Perm, v: Perm, n: int) -> CohomologyClass:
    s = schubert_polynomials(n)
    return expand_schubert(s[u] * s[v], n)


def std_indices(n: int) -> List[Tuple[int, ...]]:
    """All (i_1, ..., i_{n-1}) with 0 <= i_j <= j, by degree then lex."""
    idx = list(product(*[range(j + 1) for j in range(1, n)]))
    return sorted(idx, key=lambda t: (sum(t), t))


@lru_cache(maxsize=None)
def elementary(i: int, k: int) -> Polynomial:
    """e_i(x_1, ..., x_k); zero unless 0 <= i <= k."""
    if i < 0 or i > k:
        return Polynomial()
    if i == 0:
        return const(1)
    return elementary(i, k - 1) + x(k) * elementary(i - 1, k - 1)


def _check_index(idx: Sequence[int], n: int) -> None:
    if len(idx) != n - 1 or any(not 0 <= a <= j for j, a in enumerate(idx, start=1)):
        raise ValueError(f"{tuple(idx)} is not a standard index for n={n}")


def std_elementary_monomial(idx: Sequence[int], n: int) -> Polynomial:
    _check_index(idx, n)
    out = const(1)
    for k, a in enumerate(idx, start=1):
        out = out * elementary(a, k)
    return out


@lru_cache(maxsize=None)
def transition_matrix(n: int) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Perm, ...], Tuple[Tuple[Fraction, ...], ...]]:
    """Rows: standard indices I; columns: permutations w; entry = coefficient of sigma_w in e_I."""
    idx = std_indices(n)
    ws = perms.all_perms(n)
    rows = []
    for I in idx:
        cls = expand_schubert(std_elementary_monomial(I, n), n).schubert_coeffs
        rows.append(tuple(Fraction(cls.get(w, 0)) for w in ws))
    return tuple(idx), tuple(ws), tuple(rows)


@lru_cache(maxsize=None)
def schubert_in_std_basis(n: int) -> Dict[Perm, Dict[Tuple[int, ...], Fraction]]:
    """Inverse transition: each sigma_w as a combination of standard elementary monomials."""
    idx, ws, rows = transition_matrix(n)
    inv = inverse(rows)  # inv[w_pos][I_pos]
    return {w: {I: inv[a][b] for b, I in enumerate(idx) if inv[a][b]} for a, w in enumerate(ws)}
