"""
Nilpotent orbits of sl_4 and the null-cone inequality
=====================================================

For every Jordan type we compare dim g^e + 2 rank{P_i(e)} with 3l.  The
inequality is what makes the null-cone of q* have the expected dimension.
"""
from iwcontract.invariants import restricted_covariants
from iwcontract.liecore import build_algebra, centralizer_dim, jordan_nilpotent, partitions
from iwcontract import exact

basis, _ = build_algebra("A3")
P = restricted_covariants("A3")
l = 3
for lam in partitions(4):
    e = jordan_nilpotent(lam, basis)
    c = centralizer_dim(e, basis)
    r = exact.rank(P.evaluate_all(basis.vec(e)))
    print(f"{'+'.join(map(str, lam)):8s}  dim g^e = {c:2d}  rank P(e) = {r}  "
          f"{c} + 2*{r} = {c + 2 * r:2d} >= {3 * l}")
