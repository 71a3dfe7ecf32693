import pytest
from hypothesis import given, settings, strategies as st

from qflag import perms
from qflag.borel import (cup_product, divided_difference, expand_schubert, normal_form,
                         schubert_in_std_basis, schubert_polynomials, std_elementary_monomial,
                         std_indices, transition_matrix)
from qflag.linalg import inverse, is_identity, matmul
from qflag.polyring import Polynomial, Var, const, graded_degree, x

P = Polynomial.parse

_xmono = st.dictionaries(st.sampled_from([Var("x", k) for k in (1, 2, 3, 4)]), st.integers(1, 3),
                         max_size=3).map(lambda d: tuple(sorted(d.items())))
xpolys = st.dictionaries(_xmono, st.integers(-3, 3), max_size=4).map(Polynomial)


def test_divided_difference_examples():
    assert divided_difference(x(1), 1, 3) == 1
    assert divided_difference(P("x1^2*x2"), 1, 3) == P("x1*x2")
    assert divided_difference(x(2), 1, 3) == -1


def test_schubert_examples(derived):
    s = schubert_polynomials(3)
    assert s[(2, 1, 3)] == x(1)
    assert s[(1, 3, 2)] == x(1) + x(2)
    assert s[(3, 1, 2)] == x(1) ** 2
    for n in (2, 3, 4):
        table = schubert_polynomials(n)
        for w, text in derived["schubert"][str(n)].items():
            assert table[perms.parse_perm(w, n)] == P(text)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_schubert_table_shape(n):
    s = schubert_polynomials(n)
    assert len(s.table) == len(perms.all_perms(n))
    assert s[perms.identity(n)] == 1
    for w, p in s:
        g = graded_degree(p)
        assert g.homogeneous and g.degree == 2 * perms.length(w)


def test_schubert_independent_of_reduced_word():
    # S_w = d_{i_1} ... d_{i_r} S_{w0} for every reduced word of v = w^{-1} w0
    for n in (3, 4):
        s = schubert_polynomials(n)
        w0 = perms.longest(n)
        for w in perms.all_perms(n):
            inv_w = [0] * n
            for pos, val in enumerate(w, start=1):
                inv_w[val - 1] = pos
            v = tuple(inv_w[j - 1] for j in w0)
            for word in _all_reduced_words(v):
                f = s[w0]
                cur = w0
                for i in reversed(word):
                    f = divided_difference(f, i, n)
                    cur = perms.times_simple(cur, i)
                assert cur == w
                assert f == s[w]


def _all_reduced_words(p):
    if perms.length(p) == 0:
        return [()]
    out = []
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            for word in _all_reduced_words(perms.times_simple(p, i)):
                out.append(word + (i,))
    return out


def test_normal_form_examples():
    assert normal_form(x(1) + x(2) + x(3), 3) == 0
    assert normal_form(x(1) ** 2, 3) == x(1) ** 2
    assert normal_form(P("x1^2*x2") * x(1), 3) == 0
    assert normal_form(x(1) ** 3, 3) == 0


@given(xpolys)
@settings(max_examples=40, deadline=None)
def test_normal_form_is_staircase_and_idempotent(f):
    r = normal_form(f, 4)
    for m in r.terms:
        for v, e in m:
            assert e <= 4 - v.index
    assert normal_form(r, 4) == r


def test_expand_examples():
    assert expand_schubert(x(1), 3).schubert_coeffs == {(2, 1, 3): 1}
    assert expand_schubert(x(1) * (x(1) + x(2)) - x(1) * x(2), 3).schubert_coeffs == {(3, 1, 2): 1}
    assert expand_schubert(const(1), 3).schubert_coeffs == {(1, 2, 3): 1}


def test_cup_product_examples():
    assert cup_product((2, 1, 3), (1, 3, 2), 3).schubert_coeffs == {(2, 3, 1): 1, (3, 1, 2): 1}
    assert cup_product((2, 1, 3), (2, 1, 3), 3).schubert_coeffs == {(3, 1, 2): 1}
    for w in perms.all_perms(3):
        assert cup_product((1, 2, 3), w, 3).schubert_coeffs == {w: 1}


@pytest.mark.parametrize("n", [3, 4])
def test_cup_product_properties(n):
    top = n * (n - 1) // 2
    ws = perms.all_perms(n)
    for u in ws:
        for v in ws:
            c = cup_product(u, v, n).schubert_coeffs
            if perms.length(u) + perms.length(v) > top:
                assert c == {}
            for w, k in c.items():
                assert k > 0 and int(k) == k
                assert perms.length(w) == perms.length(u) + perms.length(v)


def test_std_monomial_examples():
    assert std_elementary_monomial((1, 1), 3) == x(1) * (x(1) + x(2))
    assert std_elementary_monomial((0, 2), 3) == x(1) * x(2)
    assert std_elementary_monomial((0, 0, 0), 4) == 1
    with pytest.raises(ValueError):
        std_elementary_monomial((2, 0), 3)
    assert len(std_indices(4)) == 24


@pytest.mark.parametrize("n", [2, 3, 4])
def test_transition_matrix_invertible(n):
    idx, ws, rows = transition_matrix(n)
    assert len(rows) == len(ws) == len(idx)
    inv = inverse(rows)
    assert is_identity(matmul(rows, inv)) and is_identity(matmul(inv, rows))
    table = schubert_in_std_basis(n)
    s = schubert_polynomials(n)
    for w in ws:
        f = sum((std_elementary_monomial(I, n) * c for I, c in table[w].items()), Polynomial())
        assert normal_form(f - s[w], n) == 0


def test_x1_squared_in_std_basis():
    assert schubert_in_std_basis(3)[(3, 1, 2)] == {(1, 1): 1, (0, 2): -1}


@given(xpolys, st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_divided_difference_squares_to_zero(f, i):
    assert divided_difference(divided_difference(f, i, 4), i, 4) == 0


@given(xpolys, st.integers(1, 2))
@settings(max_examples=40, deadline=None)
def test_divided_difference_braid(f, i):
    d = lambda g, k: divided_difference(g, k, 4)
    assert d(d(d(f, i), i + 1), i) == d(d(d(f, i + 1), i), i + 1)


def test_bad_n():
    with pytest.raises(ValueError):
        schubert_polynomials(1)
    with pytest.raises(ValueError):
        divided_difference(x(1), 3, 3)
