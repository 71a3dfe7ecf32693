"""
Heisenberg algebra and Toda integrals
=====================================

Normal-ordered arithmetic with [P_i, Q_j] = delta_ij h Q_j, the Toda
elements E_i^k, and their action on quantum cohomology, where the top
elements kill the unit class.
"""
from qflag import perms
from qflag.heisenberg import (HeisenbergElement as H, commutator, dmodule_action, toda_D1, toda_E,
                              verify_identities)
from qflag.polyring import const
from qflag.roots import root_system

P1, Q1 = H.P(1, 2), H.Q(1, 2)
print("P1 Q1      =", (P1 * Q1).to_text())
print("P1^2 Q1    =", (P1 ** 2 * Q1).to_text())
print("[P1, Q1]   =", commutator(P1, Q1).to_text())

n = 3
for k in range(1, n + 1):
    for i in range(1, k + 1):
        print(f"E_{i}^{k} =", toda_E(i, k, n).to_text())
print("D_1 (A2)   =", toda_D1(root_system("A2")).to_text())

# E_i^n . 1 = 0 for every i
one = {perms.identity(n): const(1)}
for i in range(1, n + 1):
    print(f"E_{i}^{n} . 1 =", dmodule_action(toda_E(i, n, n), one, n) or 0)

report = verify_identities(4)
print("identity battery n=4:", "pass" if report.passed else "FAIL", report.details["families"])
