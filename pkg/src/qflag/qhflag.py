"""Quantum cohomology of Fl_n in the presentation Q[x, q] / <E_1^n, ..., E_n^n>.

``E_i^k`` (written ``ê_i^k`` in comments) are the quantum elementary
polynomials, defined by the three-term recurrence

    E_i^k = E_i^{k-1} + x_k E_{i-1}^{k-1} + q_{k-1} E_{i-2}^{k-2}.

Products of E's are rewritten into standard monomials
``E_{i_1}^1 E_{i_2}^2 ... E_{i_{n-1}}^{n-1}`` (0 <= i_j <= j) with the
commutative quantum straightening identity

    E_i^k E_{j+1}^{k+1} + E_{i+1}^k E_j^k + q_k E_{i-1}^{k-1} E_j^k
        = (same with i and j exchanged)

and the relations ``E_i^n = 0`` for ``i >= 1``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import perms
from .borel import schubert_in_std_basis, std_indices, transition_matrix
from .perms import Perm
from .polyring import Polynomial, Var, const, q, q_partial, x
from .qchevalley import OperatorMatrix, apply_operator, chevalley_operator_matrix, vec_add
from .report import SIGN_CONVENTION, Y_K_CONVENTION, Report

__all__ = [
    "STEP_BUDGET", "StraighteningError", "qelementary", "emono", "straighten",
    "expand_emono", "omega_matrix", "quantize_schubert", "quantize_schubert_std",
    "quantum_product_fl", "quantum_product_chevalley", "divisor_product_chevalley",
    "flatness_check_presentation", "quantum_normal_form", "apply_std_monomial",
    "StdIndex", "EMono", "QStdVector",
]

STEP_BUDGET = 10 ** 6

StdIndex = Tuple[int, ...]
# sorted tuple of (superscript k, subscript a) with a >= 1
EMono = Tuple[Tuple[int, int], ...]
QStdVector = Dict[StdIndex, Polynomial]


class StraighteningError(RuntimeError):
    """The rewrite step budget was exhausted."""


@lru_cache(maxsize=None)
def _qe(i: int, k: int) -> Polynomial:
    if i < 0 or i > k:
        return Polynomial()
    if i == 0:
        return const(1)
    out = _qe(i, k - 1) + x(k) * _qe(i - 1, k - 1)
    if k >= 2:
        out = out + q(k - 1) * _qe(i - 2, k - 2)
    return out


def elementary_classical(i: int, k: int) -> Polynomial:
    """e_i(x_1, ..., x_k), the q = 0 value of ê_i^k."""
    from .borel import elementary
    return elementary(i, k)


def qelementary(i: int, k: int, n: Optional[int] = None) -> Polynomial:
    """Quantum elementary polynomial ê_i^k in x_1..x_k, q_1..q_{k-1}."""
    if not 0 <= i <= k or (n is not None and k > n):
        raise ValueError(f"need 0 <= i <= k <= n, got i={i}, k={k}, n={n}")
    return _qe(i, k)


# -- formal monomials in the E's ---------------------------------------------------

def emono(factors: Iterable[Tuple[int, int]], n: int) -> Optional[EMono]:
    """Canonical form of a product of factors ``(k, a)`` = ê_a^k, or None if it is 0
    (a subscript out of range, or a superscript-n factor with a >= 1)."""
    out = []
    for k, a in factors:
        if a < 0 or a > k or k < 0:
            return None
        if a == 0:
            continue
        if k > n:
            raise ValueError(f"superscript {k} exceeds n={n}")
        if k == n:
            return None
        out.append((k, a))
    return tuple(sorted(out))


def std_to_emono(idx: StdIndex) -> EMono:
    return tuple((k, a) for k, a in enumerate(idx, start=1) if a)


def emono_to_std(m: EMono, n: int) -> Optional[StdIndex]:
    idx = [0] * (n - 1)
    for k, a in m:
        if idx[k - 1]:
            return None
        idx[k - 1] = a
    return tuple(idx)


def expand_emono(m: EMono) -> Polynomial:
    out = const(1)
    for k, a in m:
        out = out * _qe(a, k)
    return out


def _rewrite(m: EMono, n: int) -> List[Tuple[Polynomial, Optional[EMono]]]:
    # first superscript carrying two factors; its two smallest subscripts i <= j
    for pos in range(len(m) - 1):
        if m[pos][0] == m[pos + 1][0]:
            break
    k, i = m[pos]
    j = m[pos + 1][1]
    rest = m[:pos] + m[pos + 2:]
    one, qk = const(1), q(k)
    terms = [
        (one, [(k, j), (k + 1, i)]),
        (one, [(k, j + 1), (k, i - 1)]),
        (qk, [(k - 1, j - 1), (k, i - 1)]),
        (-one, [(k, i - 1), (k + 1, j + 1)]),
        (-qk, [(k - 1, i - 2), (k, j)]),
    ]
    return [(c, emono(list(rest) + f, n)) for c, f in terms]


_MEMO: Dict[int, Dict[EMono, QStdVector]] = {}


def _straighten_mono(m: EMono, n: int) -> QStdVector:
    memo = _MEMO.setdefault(n, {})
    if m in memo:
        return memo[m]
    steps = 0
    stack = [m]
    pending_rules: Dict[EMono, list] = {}
    while stack:
        cur = stack[-1]
        if cur in memo:
            stack.pop()
            continue
        idx = emono_to_std(cur, n)
        if idx is not None:
            memo[cur] = {idx: const(1)}
            stack.pop()
            continue
        rule = pending_rules.get(cur)
        if rule is None:
            steps += 1
            if steps > STEP_BUDGET:
                raise StraighteningError(f"straightening exceeded {STEP_BUDGET} rewrite steps")
            rule = [(c, t) for c, t in _rewrite(cur, n) if t is not None]
            pending_rules[cur] = rule
        missing = [t for _, t in rule if t not in memo]
        if missing:
            stack.extend(missing)
            continue
        out: QStdVector = {}
        for c, t in rule:
            for I, p in memo[t].items():
                out[I] = out.get(I, Polynomial()) + c * p
        memo[cur] = {I: p for I, p in out.items() if p}
        del pending_rules[cur]
        stack.pop()
    return memo[m]


Expr = Mapping[Sequence[Tuple[int, int]], Union[Polynomial, int, Fraction]]


def straighten(expr: Expr, n: int) -> QStdVector:
    """Rewrite ``{product of factors (k, a): q-coefficient}`` in standard monomials."""
    out: QStdVector = {}
    for factors, c in expr.items():
        m = emono(factors, n)
        if m is None or not c:
            continue
        for I, p in _straighten_mono(m, n).items():
            out[I] = out.get(I, Polynomial()) + p * c
    order = {I: r for r, I in enumerate(std_indices(n))}
    return {I: out[I] for I in sorted(out, key=order.get) if out[I]}


def std_vector_to_poly(vec: Mapping[StdIndex, Polynomial]) -> Polynomial:
    out = Polynomial()
    for I, p in vec.items():
        out = out + p * expand_emono(std_to_emono(I))
    return out


# -- multiplication matrices --------------------------------------------------------

@lru_cache(maxsize=None)
def omega_matrix(k: int, n: int) -> OperatorMatrix:
    """Multiplication by y_k = lambda_k = -ê_1^k in the basis of quantum standard
    monomials; ``columns[I][L]`` is the coefficient of ê_L in y_k ê_I."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={n}")
    idx = std_indices(n)
    cols = {}
    for I in idx:
        cols[I] = straighten({std_to_emono(I) + ((k, 1),): -1}, n)
    return OperatorMatrix(list(idx), cols)


def flatness_check_presentation(n: int) -> Report:
    report = Report("quantization", f"Fl_{n}", conventions=[Y_K_CONVENTION, SIGN_CONVENTION])
    omegas = {k: omega_matrix(k, n) for k in range(1, n)}
    for i, j in combinations(range(1, n), 2):
        report.checks += 2
        for r, c, a, b in (omegas[i] @ omegas[j]).differences(omegas[j] @ omegas[i]):
            report.fail(condition="commutation", i=i, j=j, row=str(r), col=str(c), lhs=a, rhs=b)
        di = omegas[j].map_entries(lambda p: q_partial(p, i))
        dj = omegas[i].map_entries(lambda p: q_partial(p, j))
        for r, c, a, b in di.differences(dj):
            report.fail(condition="closedness", i=i, j=j, row=str(r), col=str(c), lhs=a, rhs=b)
    report.details["basis_size"] = len(std_indices(n))
    return report


# -- quantization and quantum products -------------------------------------------

def quantize_schubert_std(w: Perm, n: int) -> Dict[StdIndex, Fraction]:
    """Coefficients c_I with sigma_w = sum c_I e_I classically; the quantum
    Giambelli polynomial is then sum c_I ê_I."""
    return dict(schubert_in_std_basis(n)[tuple(w)])


def quantize_schubert(w: Perm, n: int) -> Polynomial:
    out = Polynomial()
    for I, c in quantize_schubert_std(w, n).items():
        out = out + expand_emono(std_to_emono(I)) * c
    return out


def _std_to_schubert(vec: Mapping[StdIndex, Polynomial], n: int) -> Dict[Perm, Polynomial]:
    # quantized classes: ĉ_w = sum_I Tinv[w][I] ê_I, so ê_I = sum_w T[I][w] ĉ_w
    idx, ws, rows = transition_matrix(n)
    pos = {I: r for r, I in enumerate(idx)}
    out: Dict[Perm, Polynomial] = {}
    for I, p in vec.items():
        for c, w in zip(rows[pos[I]], ws):
            if c:
                out[w] = out.get(w, Polynomial()) + p * c
    return {w: out[w] for w in ws if w in out and out[w]}


def quantum_product_fl(u: Perm, v: Perm, n: int) -> Dict[Perm, Polynomial]:
    """``sigma_u o sigma_v`` computed in the presentation and read off in the
    quantized Schubert basis."""
    cu, cv = quantize_schubert_std(u, n), quantize_schubert_std(v, n)
    expr: Dict[EMono, Polynomial] = {}
    for I, a in cu.items():
        for J, b in cv.items():
            key = std_to_emono(I) + std_to_emono(J)
            expr[key] = expr.get(key, Polynomial()) + const(a * b)
    return _std_to_schubert(straighten(expr, n), n)


# -- the same product through quantum Chevalley operators ---------------------------

def _x_operator(k: int, n: int, vec: Dict[Perm, Polynomial]) -> Dict[Perm, Polynomial]:
    # x_k = sigma_{s_k} - sigma_{s_{k-1}}, acting by quantum multiplication
    rs = perms.type_a(n)
    wv = {perms.perm_to_weyl(w): p for w, p in vec.items()}
    out = {}
    if k <= n - 1:
        out = apply_operator(chevalley_operator_matrix(rs, k), wv)
    if k >= 2:
        out = vec_add(out, apply_operator(chevalley_operator_matrix(rs, k - 1), wv), -1)
    return {perms.weyl_to_perm(w, n): p for w, p in out.items()}


def _add_into(acc: Dict[Perm, Polynomial], vec: Mapping[Perm, Polynomial], c) -> None:
    for w, p in vec.items():
        s = acc.get(w, Polynomial()) + p * c
        if s:
            acc[w] = s
        else:
            acc.pop(w, None)


def _apply_qe(i: int, k: int, n: int, vec: Dict[Perm, Polynomial], memo) -> Dict[Perm, Polynomial]:
    """ê_i^k evaluated at the commuting operators x_1..x_k, applied to vec."""
    if i < 0 or i > k:
        return {}
    if i == 0:
        return dict(vec)
    key = (i, k)
    if key in memo:
        return memo[key]
    out: Dict[Perm, Polynomial] = {}
    _add_into(out, _apply_qe(i, k - 1, n, vec, memo), 1)
    _add_into(out, _x_operator(k, n, _apply_qe(i - 1, k - 1, n, vec, memo)), 1)
    if k >= 2:
        _add_into(out, _apply_qe(i - 2, k - 2, n, vec, memo), q(k - 1))
    memo[key] = out
    return out


def apply_std_monomial(idx: StdIndex, n: int, vec: Dict[Perm, Polynomial]) -> Dict[Perm, Polynomial]:
    for k, a in reversed(std_to_emono(idx)):
        vec = _apply_qe(a, k, n, vec, {})
    return vec


def quantum_product_chevalley(u: Perm, v: Perm, n: int) -> Dict[Perm, Polynomial]:
    """``sigma_u o sigma_v`` with sigma_u's quantum Giambelli polynomial evaluated
    at the quantum Chevalley operators; no straightening involved."""
    out: Dict[Perm, Polynomial] = {}
    start = {tuple(v): const(1)}
    for I, c in quantize_schubert_std(u, n).items():
        _add_into(out, apply_std_monomial(I, n, start), c)
    order = {w: r for r, w in enumerate(perms.all_perms(n))}
    return {w: out[w] for w in sorted(out, key=order.get)}


def divisor_product_chevalley(i: int, v: Perm, n: int) -> Dict[Perm, Polynomial]:
    """``sigma_{s_i} o sigma_v`` straight from the quantum Chevalley formula."""
    col = chevalley_operator_matrix(perms.type_a(n), i).columns[perms.perm_to_weyl(v)]
    order = {w: r for r, w in enumerate(perms.all_perms(n))}
    out = {perms.weyl_to_perm(w, n): p for w, p in col.items()}
    return {w: out[w] for w in sorted(out, key=order.get)}


# -- independent oracle: Groebner normal form in Q[x, q] ------------------------------

@lru_cache(maxsize=None)
def _sympy_setup(n: int, order: str):
    import sympy
    xs = sympy.symbols(f"x1:{n + 1}")
    qs = sympy.symbols(f"q1:{n}") if n > 1 else ()
    gens = list(xs) + list(qs)
    rels = [_to_sympy(_qe(i, n), xs, qs) for i in range(1, n + 1)]
    basis = sympy.groebner(rels, *gens, order=order)
    return xs, qs, gens, basis


def _to_sympy(p: Polynomial, xs, qs):
    import sympy
    expr = sympy.Integer(0)
    for m, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for v, e in m:
            if v.kind == "x":
                t *= xs[v.index - 1] ** e
            elif v.kind == "q":
                t *= qs[v.index - 1] ** e
            else:
                raise ValueError(f"unexpected variable {v}")
        expr += t
    return expr


def _from_sympy(expr, gens, n: int) -> Polynomial:
    import sympy
    poly = sympy.Poly(expr, *gens)
    out = {}
    for exps, c in poly.terms():
        m = []
        for g, e in zip(range(len(gens)), exps):
            if e:
                m.append((Var("x", g + 1) if g < n else Var("q", g - n + 1), int(e)))
        out[tuple(sorted(m))] = Fraction(int(c.p), int(c.q))
    return Polynomial(out)


def quantum_normal_form(f: Polynomial, n: int, order: Optional[str] = None) -> Polynomial:
    """Normal form modulo <ê_1^n, ..., ê_n^n> from a sympy Groebner basis with
    x_1 > ... > x_n > q_1 > ... > q_{n-1}.

    The default order is lex for n <= 3 and grevlex beyond (a lex basis for
    n = 4 takes minutes in sympy).  Either decides ideal membership."""
    if order is None:
        order = "lex" if n <= 3 else "grevlex"
    xs, qs, gens, basis = _sympy_setup(n, order)
    _, r = basis.reduce(_to_sympy(f, xs, qs))
    return _from_sympy(r, gens, n)
