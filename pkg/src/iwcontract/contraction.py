"""The contraction q = b x| (u^-)^a of a classical algebra.

q is identified with g as a vector space (b + u^-), and q* with u + b^-, so
both are carried by the same label set.  Under these identifications the
pairing q x q* -> k is just the trace form: beta(b, xi) + beta(eta, u) equals
beta(b + eta, u + xi) because b is orthogonal to u and u^- to b^-.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from . import exact
from .errors import Inconclusive, NotRegular, ZeroParameter
from .liecore import (GVector, StructuredBasis, as_spec, build_algebra, label_kind)
from .polyring import SparsePoly

SAMPLE_RANGE = 999
MAX_RESAMPLES = 8


class QVector(GVector):
    """Element (b, eta) of q."""

    @property
    def b_part(self) -> GVector:
        return GVector({k: v for k, v in self.items() if label_kind(k) != "neg"})

    @property
    def n_part(self) -> GVector:
        return GVector({k: v for k, v in self.items() if label_kind(k) == "neg"})


class QDualVector(GVector):
    """Element (u, xi) of q* = u + b^-."""

    @property
    def u_part(self) -> GVector:
        return GVector({k: v for k, v in self.items() if label_kind(k) == "pos"})

    @property
    def bminus_part(self) -> GVector:
        return GVector({k: v for k, v in self.items() if label_kind(k) != "pos"})


def rng_for(seed: int, *tags) -> random.Random:
    """Deterministic generator for (seed, tags); independent streams per tag."""
    return random.Random(":".join([str(seed)] + [str(t) for t in tags]))


def random_coords(rng: random.Random, n: int, lo: int = -SAMPLE_RANGE, hi: int = SAMPLE_RANGE) -> list[int]:
    return [rng.randint(lo, hi) for _ in range(n)]


class Contraction:
    """Structure data of q derived once from a structured basis of g."""

    def __init__(self, basis: StructuredBasis):
        self.basis = basis
        d = basis.dim
        self.dim = d
        self.kind = [label_kind(lab) for lab in basis.labels]
        self.is_neg = [k == "neg" for k in self.kind]
        S = basis.structure
        qS: list[list[dict]] = [[{} for _ in range(d)] for _ in range(d)]
        for j in range(d):
            for k in range(d):
                if self.is_neg[j] and self.is_neg[k]:
                    continue
                if self.is_neg[j] or self.is_neg[k]:
                    qS[j][k] = {m: c for m, c in S[j][k].items() if self.is_neg[m]}
                else:
                    qS[j][k] = dict(S[j][k])
        self.structure = qS
        self.b_idx = [basis.index[lab] for lab in basis.b_labels]
        self.bminus_idx = [basis.index[lab] for lab in basis.bminus_labels]
        self.pos_idx = [basis.index[lab] for lab in basis.pos_labels]
        self.neg_idx = [basis.index[lab] for lab in basis.neg_labels]
        self.cartan_idx = [basis.index[lab] for lab in basis.cartan_labels]
        block = [[basis.gram[c][e] for e in self.bminus_idx] for c in self.b_idx]
        self._b_bminus_inv = exact.inverse(block)

    # brackets -----------------------------------------------------------------

    def bracket_vec(self, x: Sequence, y: Sequence) -> list:
        out = [0] * self.dim
        S = self.structure
        for j, xj in enumerate(x):
            if not xj:
                continue
            Sj = S[j]
            for k, yk in enumerate(y):
                if not yk:
                    continue
                c = xj * yk
                for m, s in Sj[k].items():
                    out[m] += c * s
        return [exact.norm(v) for v in out]

    def ad_matrix(self, x: Sequence) -> list[list]:
        d = self.dim
        cols = [self.bracket_vec(x, [int(i == k) for i in range(d)]) for k in range(d)]
        return [[cols[k][m] for k in range(d)] for m in range(d)]

    # pairing with q* ------------------------------------------------------------

    def pairing_values(self, y: Sequence) -> list:
        """Values <e_m, y> for all basis elements e_m of q (the linear coordinates of q*)."""
        G = self.basis.gram
        return [exact.norm(sum(G[m][k] * y[k] for k in range(self.dim) if y[k] and G[m][k]))
                for m in range(self.dim)]

    def dual_from_values(self, X: Sequence) -> list:
        """Inverse of :meth:`pairing_values`."""
        Gi = self.basis.gram_inv
        return [exact.norm(sum(Fraction(Gi[k][m]) * X[m] for m in range(self.dim) if X[m] and Gi[k][m]))
                for k in range(self.dim)]

    def _solve_bminus(self, rhs: Sequence) -> list:
        """Coordinates (full length) of the b^- element with beta(e_c, .) = rhs_c, c in b."""
        out = [0] * self.dim
        for a, e in enumerate(self.bminus_idx):
            out[e] = exact.norm(sum(Fraction(self._b_bminus_inv[a][c]) * rhs[c]
                                    for c in range(len(rhs)) if rhs[c]))
        return out

    def kirillov_matrix(self, y: Sequence) -> list[list]:
        return self.kirillov_from_values(self.pairing_values(y))

    def kirillov_from_values(self, X: Sequence) -> list[list]:
        d = self.dim
        S = self.structure
        K = [[0] * d for _ in range(d)]
        for j in range(d):
            for k in range(j + 1, d):
                v = 0
                for m, c in S[j][k].items():
                    if X[m]:
                        v += c * X[m]
                if v:
                    K[j][k] = v
                    K[k][j] = -v
        return K


@lru_cache(maxsize=None)
def _contraction(spec) -> Contraction:
    basis, _ = build_algebra(spec)
    return Contraction(basis)


def contraction_for(spec_or_basis) -> Contraction:
    if isinstance(spec_or_basis, StructuredBasis):
        return _contraction(spec_or_basis.spec)
    if isinstance(spec_or_basis, Contraction):
        return spec_or_basis
    return _contraction(as_spec(spec_or_basis))


# operations ------------------------------------------------------------------

def q_bracket(x: GVector, y: GVector, basis: StructuredBasis) -> QVector:
    """[(b, eta), (b', eta')] = ([b, b'], b o eta' - b' o eta)."""
    Q = contraction_for(basis)
    return basis.from_vec(Q.bracket_vec(basis.vec(x), basis.vec(y)), QVector)


def circ(b: GVector, eta: GVector, basis: StructuredBasis) -> GVector:
    """b o eta = p_-([b, eta]), the b-module structure on u^-."""
    v = basis.bracket_vec(basis.vec(b), basis.vec(eta))
    return GVector({lab: c for lab, c in zip(basis.labels, v) if c and label_kind(lab) == "neg"})


def family_bracket(x: GVector, y: GVector, t, basis: StructuredBasis) -> GVector:
    """[x, y]_(t) = c_t^{-1}[c_t x, c_t y] with c_t scaling the u^- part by t."""
    if t == 0:
        raise ZeroParameter("the contraction parameter must be nonzero")
    t = Fraction(t)
    cx = GVector({k: v * t if label_kind(k) == "neg" else v for k, v in x.items()})
    cy = GVector({k: v * t if label_kind(k) == "neg" else v for k, v in y.items()})
    z = basis.from_vec(basis.bracket_vec(basis.vec(cx), basis.vec(cy)))
    return GVector({k: v / t if label_kind(k) == "neg" else v for k, v in z.items()})


def family_structure(basis: StructuredBasis) -> dict[tuple[int, int, int], SparsePoly]:
    """Structure constants of [ , ]_(t) as polynomials in t, keyed by (j, k, m)."""
    neg = [label_kind(lab) == "neg" for lab in basis.labels]
    out = {}
    for j in range(basis.dim):
        for k in range(basis.dim):
            for m, c in basis.structure[j][k].items():
                e = int(neg[j]) + int(neg[k]) - int(neg[m])
                if e < 0:
                    raise AssertionError("negative power of t in the contraction family")
                out[(j, k, m)] = SparsePoly(("t",), {(e,): c})
    return out


def moment_map_phi(u: GVector, eta: GVector, basis: StructuredBasis) -> GVector:
    """The element phi(u, eta) of b^- with beta(b, phi) = beta([b, u], eta) for all b in b."""
    Q = contraction_for(basis)
    uv, ev = basis.vec(u), basis.vec(eta)
    rhs = []
    for c in Q.b_idx:
        e_c = [int(i == c) for i in range(basis.dim)]
        rhs.append(basis.form_vec(basis.bracket_vec(e_c, uv), ev))
    return basis.from_vec(Q._solve_bminus(rhs))


def borel_coadjoint(b: GVector, xi: GVector, basis: StructuredBasis) -> GVector:
    """b * xi: the xi' in b^- with beta(b'', xi') = -beta([b, b''], xi) for all b'' in b."""
    Q = contraction_for(basis)
    bv, xv = basis.vec(b), basis.vec(xi)
    rhs = []
    for c in Q.b_idx:
        e_c = [int(i == c) for i in range(basis.dim)]
        rhs.append(-basis.form_vec(basis.bracket_vec(bv, e_c), xv))
    return basis.from_vec(Q._solve_bminus(rhs))


def coadjoint_apply(x: GVector, y: GVector, basis: StructuredBasis) -> QDualVector:
    """Infinitesimal coadjoint action (b, eta) * (u, xi) = ([b, u], -phi(u, eta) + b * xi).

    The sign of the moment-map term is the one forced by
    ``<[x, z], y> + <z, x * y> = 0``.
    """
    x, y = QVector(x.coords), QDualVector(y.coords)
    b, eta = x.b_part, x.n_part
    u, xi = y.u_part, y.bminus_part
    bu = basis.from_vec(basis.bracket_vec(basis.vec(b), basis.vec(u)))
    out = bu - moment_map_phi(u, eta, basis) + borel_coadjoint(b, xi, basis)
    return QDualVector(out.coords)


def coadjoint_apply_dual(x: GVector, y: GVector, basis: StructuredBasis) -> QDualVector:
    """The same action computed from its defining adjointness identity."""
    Q = contraction_for(basis)
    xv = basis.vec(x)
    X = Q.pairing_values(basis.vec(y))
    # <e_k, x*y> = -<[x, e_k], y>
    vals = []
    for k in range(Q.dim):
        e_k = [int(i == k) for i in range(Q.dim)]
        z = Q.bracket_vec(xv, e_k)
        vals.append(-sum(c * X[m] for m, c in enumerate(z) if c))
    return basis.from_vec(Q.dual_from_values(vals), QDualVector)


def pairing(x: GVector, y: GVector, basis: StructuredBasis):
    """<(b, eta), (u, xi)> = beta(b, xi) + beta(eta, u)."""
    x, y = QVector(x.coords), QDualVector(y.coords)
    return exact.norm(basis.form_vec(basis.vec(x.b_part), basis.vec(y.bminus_part))
                      + basis.form_vec(basis.vec(x.n_part), basis.vec(y.u_part)))


def group_coadjoint_N(eta: GVector, y: GVector, basis: StructuredBasis) -> QDualVector:
    """(u, xi) -> (u, xi + phi(u, eta)).

    With the sign of :func:`coadjoint_apply` this is the action of exp(-eta);
    eta acts nilpotently, so the exponential series stops after one term.
    """
    y = QDualVector(y.coords)
    return QDualVector((y + moment_map_phi(y.u_part, eta, basis)).coords)


def adjoint_apply(x: GVector, z: GVector, basis: StructuredBasis) -> QVector:
    return q_bracket(x, z, basis)


def _exp_nilpotent(M):
    n = len(M)
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    power = [row[:] for row in out]
    k = 1
    while True:
        power = exact.matmul(power, M)
        if all(v == 0 for row in power for v in row):
            break
        f = Fraction(1, factorial(k))
        out = [[out[i][j] + f * power[i][j] for j in range(n)] for i in range(n)]
        k += 1
        if k > n + 1:
            raise ValueError("matrix is not nilpotent")
    return out


def _conjugate(S, Sinv, M):
    return exact.matmul(exact.matmul(S, M), Sinv)


def torus_element(s: Sequence, basis: StructuredBasis) -> list:
    """Diagonal group element from l nonzero rationals."""
    spec = basis.spec
    l = spec.rank
    s = [Fraction(v) for v in s]
    if any(v == 0 for v in s) or len(s) != l:
        raise ValueError("need l nonzero torus parameters")
    if spec.family == "A":
        prod = Fraction(1)
        for v in s:
            prod *= v
        diag = s + [1 / prod]
    else:
        mid = [Fraction(1)] if spec.family == "B" else []
        diag = s + mid + [1 / v for v in reversed(s)]
    return diag


def adjoint_torus(s: Sequence, x: GVector, basis: StructuredBasis) -> QVector:
    """Ad_Q of a torus element: conjugation by the diagonal matrix on all of q."""
    diag = torus_element(s, basis)
    n = basis.n
    M = basis.matrix_of(x)
    N = [[M[i][j] * diag[i] / diag[j] for j in range(n)] for i in range(n)]
    return basis.from_vec(basis.coords_of(N), QVector)


def adjoint_unipotent(u: GVector, x: GVector, basis: StructuredBasis) -> QVector:
    """Ad_Q(exp u) for u in u: (Ad(s) b, p_-(Ad(s) eta))."""
    x = QVector(x.coords)
    U = basis.matrix_of(u)
    if any(U[i][j] for i in range(basis.n) for j in range(i + 1)):
        raise ValueError("unipotent generator must lie in u")
    S = _exp_nilpotent(U)
    Sinv = _exp_nilpotent([[-v for v in row] for row in U])
    b = basis.from_matrix(_conjugate(S, Sinv, basis.matrix_of(x.b_part)))
    eta = basis.from_matrix(_conjugate(S, Sinv, basis.matrix_of(x.n_part)))
    eta = GVector({k: v for k, v in eta.items() if label_kind(k) == "neg"})
    return QVector((b + eta).coords)


def adjoint_N(eta: GVector, x: GVector, basis: StructuredBasis) -> QVector:
    """Ad_Q(exp eta) (b, eta') = (b, eta' - b o eta)."""
    x = QVector(x.coords)
    return QVector((x - circ(x.b_part, eta, basis)).coords)


def kirillov_matrix(y: GVector, basis: StructuredBasis) -> list[list]:
    Q = contraction_for(basis)
    return Q.kirillov_matrix(basis.vec(y))


def kirillov_rank(y: GVector, basis: StructuredBasis) -> int:
    return exact.rank(kirillov_matrix(y, basis))


def random_dual_values(Q: Contraction, rng: random.Random) -> list:
    """Pairing values of a random integer point of q*."""
    return Q.pairing_values(random_coords(rng, Q.dim))


def index_estimate(spec, samples: int = 5, seed: int = 0) -> int:
    """dim q minus the largest Kirillov rank seen at random points.

    A second batch re-checks the maximum; a rank increase in the re-check
    triggers another batch, up to MAX_RESAMPLES times.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    Q = contraction_for(spec)
    best = -1
    for attempt in range(MAX_RESAMPLES + 1):
        ranks = []
        for i in range(samples):
            rng = rng_for(seed, "index", attempt, i)
            ranks.append(exact.rank(Q.kirillov_from_values(random_dual_values(Q, rng))))
        top = max(ranks)
        if top <= best:
            return Q.dim - best
        best = top
    raise Inconclusive(f"Kirillov rank kept increasing after {MAX_RESAMPLES} resamples")


def u_conjugate_to_cartan(b: GVector, basis: StructuredBasis) -> GVector:
    """u' in u with exp(ad u')(t) = t + u, where b = t + u has regular Cartan part t."""
    tvec = [b[lab] for lab in basis.cartan_labels]
    values = {lab: basis.root_value(lab, tvec) for lab in basis.pos_labels}
    bad = [lab for lab, v in values.items() if v == 0]
    if bad:
        raise NotRegular(f"root {bad[0]} vanishes on the Cartan part")
    target = basis.matrix_of(GVector({k: v for k, v in b.items() if label_kind(k) != "neg"}))
    T = basis.matrix_of(GVector({lab: b[lab] for lab in basis.cartan_labels}))
    heights = sorted({sum(int(c) for c in lab[2:].split(",")) for lab in basis.pos_labels})
    uprime: dict[str, Fraction] = {}
    for h in heights:
        U = basis.matrix_of(GVector(uprime))
        S = _exp_nilpotent(U)
        Sinv = _exp_nilpotent([[-v for v in row] for row in U])
        current = basis.coords_of(_conjugate(S, Sinv, T))
        tgt = basis.coords_of(target)
        for lab in basis.pos_labels:
            if sum(int(c) for c in lab[2:].split(",")) != h:
                continue
            i = basis.index[lab]
            delta = Fraction(tgt[i]) - Fraction(current[i])
            if delta:
                # adding c*e_gamma changes the gamma-coordinate by [c e_gamma, t] = -gamma(t) c
                uprime[lab] = uprime.get(lab, 0) - delta / values[lab]
    return GVector(uprime)


def exp_ad(u: GVector, x: GVector, basis: StructuredBasis) -> GVector:
    """exp(ad u)(x) computed in the matrix model."""
    U = basis.matrix_of(u)
    S = _exp_nilpotent(U)
    Sinv = _exp_nilpotent([[-v for v in row] for row in U])
    return basis.from_matrix(_conjugate(S, Sinv, basis.matrix_of(x)))
