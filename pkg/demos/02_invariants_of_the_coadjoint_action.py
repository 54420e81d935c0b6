"""
Coadjoint invariants of q for sp_4
==================================

The invariants of q* are read off from the Kostant covariants of sp_4
restricted to u.  Each one is bi-homogeneous of bidegree (m_i, 1), and the top
one collapses to a single monomial.
"""
from iwcontract.invariants import (basic_invariants, hat_invariants, highest_component_adj,
                                   highest_component_coadj, monomial_top_invariant, proportionality)
from iwcontract.liecore import build_algebra

basis, roots = build_algebra("C2")
inv = hat_invariants("C2")

for i, (f, h) in enumerate(zip(inv.f, inv.hatP), start=1):
    print(f"f_{i} has {len(f)} terms; P-hat_{i} = {h}")
    print(f"   bidegree {inv.bidegrees[i - 1]}")

# P-hat_i is the highest component of f_i once k[g] is identified with S(g)
for i, (f, h) in enumerate(zip(inv.f, inv.hatP), start=1):
    c = proportionality(highest_component_coadj(f, basis), h)
    print(f"highest component of f_{i} = {c} * P-hat_{i};  adjoint side: {highest_component_adj(f, basis)}")

# theta = 2 alpha_1 + alpha_2, so the top invariant is X_{-a1}^2 X_{-a2} X_theta
print("theta =", roots.theta)
print("P-hat_2 / monomial =", proportionality(inv.hatP[-1], monomial_top_invariant("C2")))
print("degree sum", sum(h.degree() for h in inv.hatP), "= (dim q + l)/2 =", (basis.dim + 2) // 2)
print("basic invariants of sp_4 have degrees", [f.degree() for f in basic_invariants("C2")])
