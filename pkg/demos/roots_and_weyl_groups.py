"""
Root systems and Weyl groups
============================

Build a root system from a Cartan matrix, list its positive roots and
coroots, and walk the Weyl group by length.
"""
from collections import Counter

from qflag.roots import coroot_gram, root_system, weyl_group

# B2 from its preset name; a_ij = <alpha_i^vee, alpha_j>
rs = root_system("B2")
print("Cartan matrix:", rs.cartan.entries)

# positive roots in simple-root coordinates, lowest height first
for root, coroot in zip(rs.positive_roots, rs.positive_coroots):
    print(f"  root {root}  coroot {coroot}")

print("coroot Gram matrix:", coroot_gram(rs))

# the Weyl group is the dihedral group of order 8
G = weyl_group(rs)
print("order", len(G), "longest word", G.longest.word)
print("elements per length:", sorted(Counter(w.length for w in G).items()))

# any integer Cartan matrix works; G2 written out by hand
g2 = root_system([[2, -1], [-3, 2]])
print("G2 has", len(g2.positive_roots), "positive roots and",
      len(weyl_group(g2)), "Weyl group elements")
