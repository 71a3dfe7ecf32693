"""
Quantum elementary polynomials and straightening
================================================

The quantum cohomology of Fl_n is Q[x, q] modulo the quantum elementary
polynomials. Products of standard monomials are rewritten back into the
standard basis, giving multiplication matrices and quantum Giambelli
polynomials.
"""
from qflag import perms
from qflag.qhflag import (omega_matrix, qelementary, quantize_schubert, quantum_normal_form,
                          quantum_product_chevalley, quantum_product_fl, std_vector_to_poly,
                          straighten)

n = 3
for k in range(1, n + 1):
    print(f"E_{k}^{k} =", qelementary(k, k).to_text())

# (e_1^1)^2 straightened into standard monomials; keys are exponent tuples
vec = straighten({((1, 1), (1, 1)): 1}, n)
print("(e_1^1)^2 =", {I: p.to_text() for I, p in vec.items()})

# the same product reduced by a Groebner basis agrees
print("Groebner check:",
      quantum_normal_form(std_vector_to_poly(vec) - qelementary(1, 1) ** 2, n).to_text() or "0")

print("Omega_1 for Fl_2:", [[p.to_text() for p in row] for row in omega_matrix(1, 2).dense()])

for w in perms.all_perms(n):
    print(f"quantum Giambelli {perms.perm_str(w)}:", quantize_schubert(w, n).to_text())

# two independent routes to sigma_{s1} o sigma_{w0}
u, w0 = (2, 1, 3), (3, 2, 1)
a = quantum_product_fl(u, w0, n)
print({perms.perm_str(v): p.to_text() for v, p in a.items()},
      "routes agree:", a == quantum_product_chevalley(u, w0, n))
