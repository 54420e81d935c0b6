"""
The contraction of sl_3
=======================

Build sl_3 in its matrix model, contract it, and watch the bracket of the
rescaled family degenerate as t goes to 0.
"""
from fractions import Fraction

from iwcontract.contraction import contraction_for, family_bracket, index_estimate, q_bracket
from iwcontract.liecore import build_algebra

basis, roots = build_algebra("A2")
print("basis:", ", ".join(basis.labels))
print("highest root:", roots.theta, " Coxeter number:", roots.coxeter)

# e_{alpha_1} and e_{-alpha_1}: in g their bracket is a Cartan element
e = basis.element("e+1,0")
f = basis.element("e-1,0")
for t in (1, "1/2", "1/10", "1/1000"):
    print(f"[e, f]_(t={t}) =", family_bracket(e, f, Fraction(t), basis).to_json())

# at t = 0 the b-component disappears: u^- becomes an abelian ideal
print("[e, f] in q =", q_bracket(e, f, basis).to_json())
print("[f, f'] in q =", q_bracket(f, basis.element("e-0,1"), basis).to_json())

# q is not reductive, yet its index is still the rank
Q = contraction_for(basis)
print("dim q =", Q.dim, " index =", index_estimate("A2"))
