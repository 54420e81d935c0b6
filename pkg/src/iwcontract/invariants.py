"""Invariants of g, their covariants, and the invariants of q and q*.

Polynomials on g use the basis labels as coordinate variables.  Polynomials on
q* use the same labels, read as elements of q acting on q* through the
pairing: ``X_m(y) = <e_m, y>``.  Polynomials on q again use the labels as
coordinates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Sequence

from . import exact
from .contraction import contraction_for
from .errors import NotHomogeneous, RangeViolation
from .liecore import StructuredBasis, as_spec, build_algebra, label_kind, opposite, root_label
from .polyring import Bigrading, SparsePoly, bigrade_components


@dataclass
class CovariantFamily:
    """l polynomial maps, each a list of SparsePoly aligned with the basis labels."""
    basis: StructuredBasis
    entries: list[list[SparsePoly]]
    degrees: tuple[int, ...]
    restricted: bool = False

    def evaluate(self, i: int, point: Sequence) -> list:
        return [p.eval_vector(point) if p.terms else 0 for p in self.entries[i]]

    def evaluate_all(self, point: Sequence) -> list[list]:
        return [self.evaluate(i, point) for i in range(len(self.entries))]


@dataclass
class InvariantSet:
    spec: object
    f: list[SparsePoly]
    hatP: list[SparsePoly]
    adjoint_gens: list[SparsePoly]
    degrees: tuple[int, ...]
    bidegrees: list[tuple[int, int]]
    kinds: list[str] = field(default_factory=list)

    def generator_docs(self) -> list[dict]:
        docs = []
        for i, p in enumerate(self.hatP):
            docs.append({
                "family": self.spec.family,
                "rank": self.spec.rank,
                "i": i + 1,
                "degree": self.degrees[i],
                "bidegree": list(self.bidegrees[i]),
                "source": self.kinds[i],
                "poly": p.to_json(),
            })
        return docs

    def write_files(self, directory) -> list[Path]:
        """One JSON file per generator."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        paths = []
        for doc in self.generator_docs():
            path = directory / f"{self.spec.name}_P{doc['i']}.json"
            path.write_text(json.dumps(doc, sort_keys=True, indent=1))
            paths.append(path)
        return paths


# generic matrix and basic invariants -------------------------------------------

def generic_matrix(basis: StructuredBasis) -> list[list[SparsePoly]]:
    """The matrix sum_j x_j e_j with polynomial entries."""
    n = basis.n
    U = basis.labels
    index = {v: i for i, v in enumerate(U)}
    entries = [[{} for _ in range(n)] for _ in range(n)]
    for j, M in enumerate(basis.matrices):
        mono = tuple(int(k == j) for k in range(len(U)))
        for a in range(n):
            for b in range(n):
                if M[a][b]:
                    entries[a][b][mono] = M[a][b]
    return [[SparsePoly(U, entries[a][b], index) for b in range(n)] for a in range(n)]


def _poly_matmul(A, B, zero):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                if A[i][k].terms and B[k][j].terms:
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def _trace_power(X, k: int, zero: SparsePoly) -> SparsePoly:
    n = len(X)
    powers = {1: X}

    def power(e):
        if e not in powers:
            h = e // 2
            powers[e] = _poly_matmul(power(h), power(e - h), zero)
        return powers[e]

    a = k // 2
    A, B = power(k - a), power(a) if a else None
    if B is None:
        return sum((A[i][i] for i in range(n)), zero)
    acc = zero
    for i in range(n):
        for j in range(n):
            if A[i][j].terms and B[j][i].terms:
                acc = acc + A[i][j] * B[j][i]
    return acc


@lru_cache(maxsize=None)
def _basic_invariants(spec) -> tuple[tuple[SparsePoly, ...], tuple[str, ...]]:
    basis, roots = build_algebra(spec)
    X = generic_matrix(basis)
    zero = SparsePoly.zero(basis.labels)
    l = spec.rank
    polys, kinds = [], []
    if spec.family == "A":
        for i in range(1, l + 1):
            polys.append(_trace_power(X, i + 1, zero))
            kinds.append(f"trace(x^{i + 1})")
    else:
        top = l if spec.family in "BC" else l - 1
        for i in range(1, top + 1):
            polys.append(_trace_power(X, 2 * i, zero))
            kinds.append(f"trace(x^{2 * i})")
        if spec.family == "D":
            JX = _poly_matmul([[SparsePoly.const(basis.labels, c) if c else zero for c in row]
                               for row in basis.J], X, zero)
            pf = exact.pfaffian(JX, zero=zero, one=SparsePoly.const(basis.labels, 1),
                                is_zero=lambda p: not p.terms)
            polys.append(pf)
            kinds.append("pfaffian(Jx)")
    order = sorted(range(l), key=lambda i: polys[i].degree())
    return tuple(polys[i] for i in order), tuple(kinds[i] for i in order)


def basic_invariants(spec) -> list[SparsePoly]:
    """Generators f_1..f_l of k[g]^G, sorted by degree."""
    return list(_basic_invariants(as_spec(spec))[0])


def invariant_kinds(spec) -> list[str]:
    return list(_basic_invariants(as_spec(spec))[1])


# covariants ---------------------------------------------------------------------

def gradient_map(f: SparsePoly, basis: StructuredBasis) -> list[SparsePoly]:
    """beta-gradient: the map F with beta(F(x), y) = d f_x(y)."""
    partials = [f.diff(v) for v in basis.labels]
    Gi = basis.gram_inv
    out = []
    for j in range(basis.dim):
        acc = SparsePoly.zero(basis.labels)
        for k in range(basis.dim):
            if Gi[j][k] and partials[k].terms:
                acc = acc + partials[k] * Gi[j][k]
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def _covariants(spec) -> CovariantFamily:
    basis, roots = build_algebra(spec)
    fs = basic_invariants(spec)
    return CovariantFamily(basis, [gradient_map(f, basis) for f in fs],
                           tuple(f.degree() - 1 for f in fs))


def covariant_gradients(spec) -> CovariantFamily:
    return _covariants(as_spec(spec))


def restrict_covariants(F: CovariantFamily) -> CovariantFamily:
    """P_i = F_i restricted to u; values are checked to lie in u."""
    basis = F.basis
    off_u = [lab for lab in basis.labels if label_kind(lab) != "pos"]
    entries = []
    for i, comps in enumerate(F.entries):
        res = [p.restrict(off_u) for p in comps]
        for lab, p in zip(basis.labels, res):
            kind = label_kind(lab)
            if p.terms and kind == "neg":
                raise RangeViolation(f"P_{i + 1} has a u^- component along {lab}")
            if p.terms and kind == "cartan":
                raise RangeViolation(f"P_{i + 1} has a Cartan component along {lab}")
        entries.append(res)
    return CovariantFamily(basis, entries, F.degrees, restricted=True)


@lru_cache(maxsize=None)
def _restricted(spec) -> CovariantFamily:
    return restrict_covariants(covariant_gradients(spec))


def restricted_covariants(spec) -> CovariantFamily:
    return _restricted(as_spec(spec))


# invariants of q* and q ------------------------------------------------------------

def u_to_dual_substitution(basis: StructuredBasis) -> dict[str, SparsePoly]:
    """u-coordinate x_{e+g} in terms of the q*-function X_{e-g} = beta(e_{-g}, u)."""
    U = basis.labels
    out = {}
    for lab in basis.pos_labels:
        neg = opposite(lab)
        n = basis.gram[basis.index[lab]][basis.index[neg]]
        out[lab] = SparsePoly.var(U, neg) * Fraction(1, n)
    return out


def hat_from_covariant(comps: Sequence[SparsePoly], basis: StructuredBasis) -> SparsePoly:
    """P-hat(u, xi) = beta(P(u), xi) as a polynomial on q*."""
    U = basis.labels
    sub = u_to_dual_substitution(basis)
    acc = SparsePoly.zero(U)
    for lab, p in zip(basis.labels, comps):
        if not p.terms:
            continue
        q = p.substitute(sub)
        acc = acc + q * SparsePoly.var(U, lab)
    return acc


def q_bigrading(basis: StructuredBasis) -> Bigrading:
    """First class: b-labels; second class: u^- labels."""
    return Bigrading(basis.labels, basis.neg_labels)


@lru_cache(maxsize=None)
def _hat_invariants(spec) -> InvariantSet:
    basis, roots = build_algebra(spec)
    P = restricted_covariants(spec)
    fs = basic_invariants(spec)
    hats = [hat_from_covariant(comps, basis) for comps in P.entries]
    grading = q_bigrading(basis)
    bideg = []
    for i, h in enumerate(hats):
        comps = bigrade_components(h, grading)
        if len(comps) != 1:
            raise AssertionError(f"P-hat_{i + 1} is not bi-homogeneous")
        first, second = next(iter(comps))
        bideg.append((second, first))
    return InvariantSet(spec=spec, f=fs, hatP=hats, adjoint_gens=adjoint_invariants(spec),
                        degrees=tuple(f.degree() for f in fs), bidegrees=bideg,
                        kinds=invariant_kinds(spec))


def hat_invariants(spec) -> InvariantSet:
    """The invariants P-hat_i of the coadjoint representation of q.

    Bi-degrees are reported as (degree in u^- labels, degree in b labels).
    """
    return _hat_invariants(as_spec(spec))


def adjoint_invariants(spec) -> list[SparsePoly]:
    basis, _ = build_algebra(spec)
    return [SparsePoly.var(basis.labels, t) for t in basis.cartan_labels]


# derivations ----------------------------------------------------------------

def coadjoint_derivation(P: SparsePoly, j: int, basis: StructuredBasis) -> SparsePoly:
    """{e_j, P} in S(q): sum_k [e_j, e_k]_q * dP/dX_k."""
    Q = contraction_for(basis)
    U = basis.labels
    acc = SparsePoly.zero(U)
    for k, Sjk in enumerate(Q.structure[j]):
        if not Sjk:
            continue
        d = P.diff(U[k])
        if not d.terms:
            continue
        lin = SparsePoly(U, {tuple(int(i == m) for i in range(len(U))): c for m, c in Sjk.items()})
        acc = acc + lin * d
    return acc


def adjoint_derivation(F: SparsePoly, j: int, basis: StructuredBasis) -> SparsePoly:
    """Derivative of a function on q along the vector field z -> [e_j, z]_q."""
    Q = contraction_for(basis)
    U = basis.labels
    d = len(U)
    acc = SparsePoly.zero(U)
    for m in range(d):
        dm = F.diff(U[m])
        if not dm.terms:
            continue
        terms = {}
        for k in range(d):
            c = Q.structure[j][k].get(m)
            if c:
                terms[tuple(int(i == k) for i in range(d))] = c
        if terms:
            acc = acc + SparsePoly(U, terms) * dm
    return acc


def coadjoint_derivation_values(grad: Sequence, X: Sequence, Q) -> list:
    """All derivations {e_j, P} at a point, given dP/dX_k and X_m = <e_m, y> there."""
    out = []
    for j in range(Q.dim):
        v = 0
        for k, Sjk in enumerate(Q.structure[j]):
            if grad[k] and Sjk:
                v += grad[k] * sum(c * X[m] for m, c in Sjk.items())
        out.append(exact.norm(v))
    return out


# highest components -----------------------------------------------------------

def identify_with_symmetric(f: SparsePoly, basis: StructuredBasis) -> SparsePoly:
    """k[g] -> S(g) through beta: x_j -> sum_k G^{-1}[j][k] e_k."""
    U = basis.labels
    Gi = basis.gram_inv
    sub = {}
    for j, lab in enumerate(U):
        acc = SparsePoly.zero(U)
        for k in range(basis.dim):
            if Gi[j][k]:
                acc = acc + SparsePoly.var(U, U[k]) * Gi[j][k]
        sub[lab] = acc
    return f.substitute(sub)


def _max_component(f: SparsePoly, grading: Bigrading, which: int) -> SparsePoly:
    if not f.is_homogeneous():
        raise NotHomogeneous("highest components are defined for homogeneous polynomials")
    comps = bigrade_components(f, grading)
    if not comps:
        return f
    key = max(comps, key=lambda k: k[which])
    return comps[key]


def highest_component_coadj(f: SparsePoly, basis: StructuredBasis) -> SparsePoly:
    """Bi-homogeneous component of maximal u^- degree, after k[g] = S(g)."""
    if not f.is_homogeneous():
        raise NotHomogeneous("highest components are defined for homogeneous polynomials")
    # Only the pieces of top u-coordinate degree can reach top u^- degree, and the
    # identification swaps u and u^- coordinates, so cut before substituting.
    pos = Bigrading(basis.labels, basis.pos_labels)
    top = _max_component(f, pos, 1)
    return _max_component(identify_with_symmetric(top, basis), q_bigrading(basis), 1)


def highest_component_adj(f: SparsePoly, basis: StructuredBasis) -> SparsePoly:
    """Component of maximal degree in the b-coordinates of q."""
    return _max_component(f, q_bigrading(basis), 0)


def coadj_components(f: SparsePoly, basis: StructuredBasis) -> dict[tuple[int, int], SparsePoly]:
    """All bi-homogeneous components of f viewed in S(g) = S(b) x S(u^-)."""
    return bigrade_components(identify_with_symmetric(f, basis), q_bigrading(basis))


def monomial_top_invariant(spec) -> SparsePoly:
    """prod_i X_{e-alpha_i}^{a_i} * X_{e+theta}."""
    basis, roots = build_algebra(spec)
    l = roots.simple_roots
    mono = {root_label(a, -1): c for a, c in zip(l, roots.a_coeffs)}
    mono[root_label(roots.theta, +1)] = 1
    return SparsePoly.from_dict(basis.labels, {tuple(mono.items()): 1})


def extra_N_invariant(spec) -> SparsePoly:
    """X_{e+theta}: invariant under N, of nonzero torus weight."""
    basis, roots = build_algebra(spec)
    return SparsePoly.var(basis.labels, root_label(roots.theta, +1))


def proportionality(p: SparsePoly, q: SparsePoly):
    """The scalar c with p == c*q, or None (also None when q is zero)."""
    if not q.terms:
        return None
    m, cq = q.leading()
    cp = p.terms.get(m, 0)
    if cp == 0:
        return None
    c = exact.norm(Fraction(cp) / Fraction(cq))
    return c if p == q * c else None


def torus_weight(mono: dict[str, int]) -> tuple[int, ...]:
    """Root-lattice weight of a monomial in q-labels (Cartan labels weigh 0)."""
    w = None
    for lab, e in mono.items():
        kind = label_kind(lab)
        if kind == "cartan":
            continue
        sign = 1 if kind == "pos" else -1
        r = [int(c) * sign * e for c in lab[2:].split(",")]
        w = r if w is None else [a + b for a, b in zip(w, r)]
    return tuple(w or ())
