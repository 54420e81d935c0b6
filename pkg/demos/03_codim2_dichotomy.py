"""
Where the codim-2 property breaks
=================================

For sp_4 the coefficient of alpha_1 in theta is 2.  On the hyperplane where
the pairing with e_{-alpha_1} vanishes every differential of P-hat_2 vanishes,
so the non-regular locus contains a divisor.  For sl_3 all coefficients are 1
and the same hyperplanes still carry regular points.
"""
from iwcontract.contraction import contraction_for, random_coords, rng_for
from iwcontract.invariants import hat_invariants
from iwcontract.liecore import build_algebra
from iwcontract.polyring import GradientTable
from iwcontract import exact


def ranks_on_hyperplane(name, simple_label, n=5):
    basis, _ = build_algebra(name)
    Q = contraction_for(basis)
    table = GradientTable(hat_invariants(name).hatP)
    out = []
    for s in range(n):
        y = random_coords(rng_for(0, "demo", name, s), Q.dim)
        y[basis.index[simple_label]] = 0
        X = Q.pairing_values(y)
        out.append((table.rank(X), exact.rank(Q.kirillov_from_values(X))))
    return out, Q.dim - basis.spec.rank


for name, lab in (("C2", "e+1,0"), ("A2", "e+1,0")):
    ranks, top = ranks_on_hyperplane(name, lab)
    print(f"{name}: on {{X_{lab.replace('+', '-')} = 0}} (jacobian rank, Kirillov rank) =", ranks,
          f" regular means ({name[1]}, {top})")

hat = hat_invariants("C2").hatP[-1]
print("P-hat_2 for C2:", hat)
print("its partials restricted to X_e-1,0 = 0:",
      {v: str(hat.diff(v).restrict(["e-1,0"])) for v in hat.variables()})
