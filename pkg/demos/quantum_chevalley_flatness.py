"""
Quantum Chevalley operators and a flat connection
=================================================

Quantum multiplication by the divisor classes sigma_{s_i} is a matrix over
Q[q]. These matrices commute and satisfy the symmetric q-derivative
condition, which is exactly flatness of the Dubrovin connection.
"""
from qflag.qchevalley import (chevalley_operator_matrix, degree2_relation_check,
                              flatness_check, quantum_chevalley)
from qflag.roots import root_system, weyl_group

rs = root_system("A2")
G = weyl_group(rs)

# sigma_{s1} o sigma_w for each w
for w in G:
    out = quantum_chevalley(rs, 1, w)
    terms = " + ".join(f"({p.to_text()}) sigma{v.word}" for v, p in out.items())
    print(f"sigma_s1 o sigma{w.word} = {terms}")

# the whole operator as a dense matrix (columns follow the Weyl group order)
for row in chevalley_operator_matrix(rs, 1).dense():
    print("  ", [p.to_text() if hasattr(p, "to_text") else str(p) for p in row])

# the degree-two relation and flatness, checked exactly
for name in ("A2", "B2", "G2", "A4"):
    r = root_system(name)
    print(name, "degree two:", degree2_relation_check(r, name).passed,
          " flat:", flatness_check(r, name).passed)
