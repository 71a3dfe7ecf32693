"""
Schubert polynomials and the Borel presentation
===============================================

Schubert polynomials come from divided differences applied to the staircase
monomial. Reducing their products modulo the symmetric functions gives the
classical cup product on the flag manifold Fl_3.
"""
from qflag import perms
from qflag.borel import cup_product, normal_form, schubert_polynomials
from qflag.polyring import Polynomial

n = 3
S = schubert_polynomials(n)
for w in perms.all_perms(n):
    print(f"S_{perms.perm_str(w)} = {S[w].to_text()}")

# x1^3 vanishes in the quotient since it is a complete homogeneous polynomial
print("x1^3 reduces to", normal_form(Polynomial.parse("x1^3"), n).to_text() or "0")

# Monk's rule: sigma_{s1} . sigma_{s1} = sigma_{312}
s1 = perms.from_word([1], n)
print("sigma_s1 * sigma_s1 =", cup_product(s1, s1, n).schubert_coeffs)

# a product of two classes of total degree 3 is a multiple of the point class
print("sigma_s1 * sigma_231 =", cup_product(s1, (2, 3, 1), n).schubert_coeffs)
