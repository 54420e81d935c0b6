"""Verification suites producing witnessed reports.

Every suite returns a list of :class:`CheckReport`.  Generic-point claims are
checked exactly at random integer points; a sample that looks non-generic is
redrawn at most ``MAX_RESAMPLES`` times before the check is reported as
inconclusive.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence

from . import exact
from .contraction import (MAX_RESAMPLES, contraction_for, family_bracket, family_structure,
                          exp_ad, index_estimate, random_coords, rng_for, u_conjugate_to_cartan)
from .errors import Inconclusive, NotRegular, UnsupportedFamily
from .invariants import (adjoint_derivation, adjoint_invariants,
                         coadjoint_derivation, coadjoint_derivation_values, covariant_gradients,
                         extra_N_invariant, hat_invariants, highest_component_adj,
                         highest_component_coadj, monomial_top_invariant, proportionality,
                         restricted_covariants)
from .liecore import (GVector, as_spec, build_algebra, centralizer_dim,
                      conjugate_partition, family_exponents, jordan_nilpotent, label_kind,
                      partitions, root_label)
from .polyring import GradientTable, SparsePoly

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
MIN_SAMPLES = 5
SUITES = ("structure", "invariance", "index", "regularity", "nullcone", "highest")


@dataclass
class CheckReport:
    name: str
    status: str
    details: str = ""
    witness: object = None
    seed: int = 0
    mode: str = "symbolic"

    def to_json(self) -> dict:
        doc = {"name": self.name, "status": self.status, "details": self.details,
               "seed": self.seed, "mode": self.mode}
        if self.witness is not None:
            doc["witness"] = self.witness
        return doc


def default_mode(spec) -> str:
    spec = as_spec(spec)
    if spec.rank <= 3 or (spec.family == "A" and spec.rank <= 4):
        return "symbolic"
    return "sampled"


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


def _vec_json(labels, vec) -> dict:
    return {lab: exact.rational_str(v) for lab, v in zip(labels, vec) if v}


def _jacobi_failure(S, d):
    """First basis triple violating Jacobi for structure constants S, or None."""
    def br(x: dict, k: int) -> dict:
        out: dict = {}
        for p, c in x.items():
            for r, s in S[p][k].items():
                out[r] = out.get(r, 0) + c * s
        return out

    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                total: dict = {}
                for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                    # [x, [y, z]] = -[[y, z], x]
                    for r, v in br(S[y][z], x).items():
                        total[r] = total.get(r, 0) + v
                if any(v != 0 for v in total.values()):
                    return a, b, c
    return None


# structure ----------------------------------------------------------------------

def check_structure_suite(spec, seed: int = 0) -> list[CheckReport]:
    spec = as_spec(spec)
    basis, roots = build_algebra(spec)
    Q = contraction_for(basis)
    L = basis.labels
    reports = []

    def rep(name, ok, details="", witness=None, mode="symbolic"):
        reports.append(CheckReport(f"structure.{name}", _ok(ok), details, witness, seed, mode))

    bad = _jacobi_failure(basis.structure, basis.dim)
    rep("g_jacobi", bad is None, "Jacobi identity of g on all basis triples",
        None if bad is None else [L[i] for i in bad])

    bad = _jacobi_failure(Q.structure, Q.dim)
    rep("q_jacobi", bad is None, "Jacobi identity of q on all basis triples",
        None if bad is None else [L[i] for i in bad])

    bad = None
    G = basis.gram
    for a in range(basis.dim):
        for b in range(basis.dim):
            for c in range(basis.dim):
                lhs = sum(v * G[m][c] for m, v in basis.structure[a][b].items())
                rhs = sum(v * G[a][m] for m, v in basis.structure[b][c].items())
                if lhs != rhs:
                    bad = (L[a], L[b], L[c])
                    break
            if bad:
                break
        if bad:
            break
    rep("trace_form_invariant", bad is None, "beta([x,y],z) = beta(x,[y,z]) on basis triples", bad)

    fam = family_structure(basis)
    bad = None
    for j in range(basis.dim):
        for k in range(basis.dim):
            keys = set(Q.structure[j][k]) | {m for (a, b, m) in fam if a == j and b == k}
            for m in keys:
                p = fam.get((j, k, m))
                const = p.eval({"t": 0}) if p is not None else 0
                if const != Q.structure[j][k].get(m, 0):
                    bad = (L[j], L[k], L[m])
    rep("family_limit", bad is None,
        "constant terms in t of the family structure constants equal those of q", bad)

    rng = rng_for(seed, "structure", spec.name)
    t = Fraction(rng.randint(1, 97), rng.randint(1, 97)) * rng.choice((-1, 1))
    St = [[{} for _ in range(basis.dim)] for _ in range(basis.dim)]
    for (j, k, m), p in fam.items():
        St[j][k][m] = p.eval({"t": t})
    bad = _jacobi_failure(St, basis.dim)
    # spot check that the polynomial coefficients agree with the direct definition
    x = GVector({lab: rng.randint(-9, 9) for lab in L})
    y = GVector({lab: rng.randint(-9, 9) for lab in L})
    direct = family_bracket(x, y, t, basis)
    via = [0] * basis.dim
    xv, yv = basis.vec(x), basis.vec(y)
    for j in range(basis.dim):
        for k in range(basis.dim):
            if xv[j] and yv[k]:
                for m, s in St[j][k].items():
                    via[m] += xv[j] * yv[k] * s
    agree = basis.vec(direct) == [exact.norm(v) for v in via]
    rep("family_jacobi", bad is None and agree,
        f"Jacobi for [ , ]_(t) at t = {t}; polynomial coefficients match c_t^-1[c_t x, c_t y]",
        None if bad is None and agree else {"t": str(t), "triple": bad and [L[i] for i in bad]},
        mode="sampled")

    std_h = {"A": spec.rank + 1, "B": 2 * spec.rank, "C": 2 * spec.rank, "D": 2 * spec.rank - 2}
    rep("theta_sum", sum(roots.a_coeffs) == roots.coxeter - 1 == std_h[spec.family] - 1,
        f"theta = {roots.theta}, sum a_i = {sum(roots.a_coeffs)}, h = {roots.coxeter}")
    rep("exponents", roots.height_exponents == family_exponents(spec) == roots.exponents,
        f"exponents {roots.exponents}; from root heights {roots.height_exponents}")
    rep("positive_root_count", len(roots.positive_roots) == (basis.dim - spec.rank) // 2 == len(basis.pos_labels),
        f"|positive roots| = {len(roots.positive_roots)}, dim g = {basis.dim}")
    in_g = all(basis.in_algebra(M) for M in basis.matrices)
    tri = all(
        all(M[i][j] == 0 for i in range(basis.n) for j in range(basis.n)
            if (label_kind(lab) == "pos" and i >= j) or (label_kind(lab) == "neg" and i <= j)
            or (label_kind(lab) == "cartan" and i != j))
        for lab, M in zip(L, basis.matrices))
    rep("triangular_model", in_g and tri, "basis matrices lie in g and respect the triangular decomposition")
    return reports


# invariance ----------------------------------------------------------------------

def _vector_bracket_polys(P: Sequence[SparsePoly], Uv: Sequence[SparsePoly], basis) -> list[SparsePoly]:
    out = [SparsePoly.zero(basis.labels) for _ in range(basis.dim)]
    S = basis.structure
    for j, pj in enumerate(P):
        if not pj.terms:
            continue
        for k, uk in enumerate(Uv):
            if not uk.terms:
                continue
            prod = pj * uk
            for m, s in S[j][k].items():
                out[m] = out[m] + prod * s
    return out


def check_invariance_suite(spec, mode: str | None = None, seed: int = 0, samples: int = 25,
                           hatP: Sequence[SparsePoly] | None = None) -> list[CheckReport]:
    """Coadjoint invariance of the P-hat_i and adjoint invariance of the Cartan coordinates.

    ``hatP`` replaces the constructed invariants (used for negative controls).
    """
    spec = as_spec(spec)
    mode = mode or default_mode(spec)
    basis, roots = build_algebra(spec)
    Q = contraction_for(basis)
    L = basis.labels
    inv = hat_invariants(spec)
    hats = list(hatP) if hatP is not None else inv.hatP
    P = restricted_covariants(spec)
    reports = []

    def rep(name, status, details="", witness=None):
        reports.append(CheckReport(f"invariance.{name}", status, details, witness, seed, mode))

    if mode == "sampled" and samples < MIN_SAMPLES:
        rep("coadjoint", INCONCLUSIVE, f"{samples} samples requested, at least {MIN_SAMPLES} required",
            {"samples": samples})
        return reports

    # coadjoint invariance of each P-hat_i
    for i, h in enumerate(hats):
        name = f"coadjoint_P{i + 1}"
        if mode == "symbolic":
            bad = None
            for j in range(Q.dim):
                d = coadjoint_derivation(h, j, basis)
                if d.terms:
                    bad = {"generator": i + 1, "direction": L[j], "derivation": d.to_json()}
                    break
            rep(name, _ok(bad is None), f"{{e_j, P-hat_{i + 1}}} == 0 for all {Q.dim} basis directions", bad)
        else:
            table = GradientTable([h])
            bad = None
            for s in range(samples):
                y = random_coords(rng_for(seed, "invariance", spec.name, i, s), Q.dim)
                X = Q.pairing_values(y)
                grad = table.matrix(X)[0]
                vals = coadjoint_derivation_values(grad, X, Q)
                nz = [j for j, v in enumerate(vals) if v]
                if nz:
                    bad = {"generator": i + 1, "direction": L[nz[0]], "value": exact.rational_str(vals[nz[0]]),
                           "point": _vec_json(L, y), "sample": s}
                    break
            rep(name, _ok(bad is None),
                f"{{e_j, P-hat_{i + 1}}} vanishes at {samples} random points of q*", bad)

    # [P_i(u), u] = 0
    u_vars = [SparsePoly.var(L, lab) if label_kind(lab) == "pos" else SparsePoly.zero(L) for lab in L]
    for i, comps in enumerate(P.entries):
        name = f"commutes_P{i + 1}"
        if mode == "symbolic":
            br = _vector_bracket_polys(comps, u_vars, basis)
            bad = next(({"component": L[m], "poly": p.to_json()} for m, p in enumerate(br) if p.terms), None)
            rep(name, _ok(bad is None), f"[P_{i + 1}(u), u] == 0 as a polynomial identity", bad)
        else:
            bad = None
            for s in range(samples):
                rng = rng_for(seed, "commute", spec.name, i, s)
                u = [rng.randint(-999, 999) if label_kind(lab) == "pos" else 0 for lab in L]
                pu = P.evaluate(i, u)
                br = basis.bracket_vec(pu, u)
                if any(br):
                    bad = {"point": _vec_json(L, u), "sample": s}
                    break
            rep(name, _ok(bad is None), f"[P_{i + 1}(u), u] = 0 at {samples} random u", bad)

    # adjoint invariance of the Cartan coordinates on q
    bad = None
    for F in adjoint_invariants(spec):
        for j in range(Q.dim):
            if adjoint_derivation(F, j, basis).terms:
                bad = {"function": F.variables()[0], "direction": L[j]}
                break
        if bad:
            break
    cartan = set(basis.cartan_labels)
    scan = all(not (set(Q.structure[j][k]) & {basis.index[t] for t in cartan})
               for j in range(Q.dim) for k in range(Q.dim))
    rep("adjoint_cartan", _ok(bad is None and scan),
        "Cartan coordinates on q are killed by every adjoint derivation; [q, q] has no t-part", bad)

    # t + u is U-conjugate to t for regular t
    bad = None
    n_conj = max(samples, MIN_SAMPLES) if mode == "sampled" else 10
    for s in range(n_conj):
        rng = rng_for(seed, "uconj", spec.name, s)
        for _ in range(MAX_RESAMPLES + 1):
            t = {lab: rng.randint(-999, 999) for lab in basis.cartan_labels}
            tvec = [t[lab] for lab in basis.cartan_labels]
            if all(basis.root_value(lab, tvec) != 0 for lab in basis.pos_labels):
                break
        b = GVector({**t, **{lab: rng.randint(-999, 999) for lab in basis.pos_labels}})
        try:
            uprime = u_conjugate_to_cartan(b, basis)
            ok = exp_ad(-uprime, b, basis) == GVector(t)
        except NotRegular:
            ok = False
        if not ok:
            bad = {"sample": s, "element": b.to_json()}
            break
    rep("u_conjugation", _ok(bad is None),
        f"exp(-ad u')(t + u) = t at {n_conj} random regular t", bad)

    # extra N-invariant e_theta: commutes with u^-, nonzero torus weight
    v = extra_N_invariant(spec)
    theta_lab = root_label(roots.theta, +1)
    bad = None
    for lab in basis.neg_labels:
        if coadjoint_derivation(v, basis.index[lab], basis).terms:
            bad = {"direction": lab}
            break
    weight_nonzero = any(coadjoint_derivation(v, basis.index[t], basis).terms for t in basis.cartan_labels)
    rep("extra_N_invariant", _ok(bad is None and weight_nonzero),
        f"X_{theta_lab} is N-invariant but not T-invariant", bad)
    return reports


# index and degrees ------------------------------------------------------------------

def _generic_jacobian_rank(table: GradientTable, Q, seed, tag, target) -> tuple[int, list, int]:
    """Jacobian rank at a random point of q*, redrawing while it is below target."""
    best, point = -1, None
    for attempt in range(MAX_RESAMPLES + 1):
        y = random_coords(rng_for(seed, tag, attempt), Q.dim)
        r = table.rank(Q.pairing_values(y))
        if r > best:
            best, point = r, y
        if r >= target:
            return r, y, attempt
    return best, point, MAX_RESAMPLES


def check_index_and_degrees(spec, seed: int = 0, samples: int = 5) -> list[CheckReport]:
    spec = as_spec(spec)
    basis, roots = build_algebra(spec)
    Q = contraction_for(basis)
    inv = hat_invariants(spec)
    l = spec.rank
    reports = []

    def rep(name, status, details="", witness=None, mode="symbolic"):
        reports.append(CheckReport(f"index.{name}", status, details, witness, seed, mode))

    try:
        ind = index_estimate(spec, samples=max(samples, 1), seed=seed)
        rep("index", _ok(ind == l), f"index estimate {ind}, rank l = {l}", None if ind == l else {"index": ind},
            mode="sampled")
    except Inconclusive as exc:
        rep("index", INCONCLUSIVE, str(exc), {"resamples": MAX_RESAMPLES}, mode="sampled")

    degs = [h.degree() for h in inv.hatP]
    total = sum(degs)
    rep("degree_sum", _ok(2 * total == Q.dim + l and tuple(degs) == roots.degrees),
        f"sum deg P-hat = {total}, (dim q + l)/2 = {Fraction(Q.dim + l, 2)}; degrees {degs}")
    expected = [(m, 1) for m in roots.exponents]
    rep("bidegrees", _ok(list(inv.bidegrees) == expected), f"bidegrees {inv.bidegrees}, expected {expected}")

    table = GradientTable(inv.hatP)
    r, y, attempts = _generic_jacobian_rank(table, Q, seed, ("jacobian", spec.name), l)
    status = PASS if r == l else INCONCLUSIVE
    rep("jacobian_rank", status, f"rank of d P-hat at a random point = {r} after {attempts} redraws",
        None if r == l else {"point": _vec_json(basis.labels, y), "resamples": attempts}, mode="sampled")
    return reports


# regularity ------------------------------------------------------------------------

def _dual_point_with_u(basis, Q, u_vec: Sequence, rng, theta_lab=None) -> list:
    """Point of q* with prescribed u-part and random b^- part."""
    y = [0] * Q.dim
    for lab in basis.labels:
        i = basis.index[lab]
        y[i] = u_vec[i] if label_kind(lab) == "pos" else rng.randint(-999, 999)
    return y


def _simple_labels(roots, sign=+1):
    return [root_label(a, sign) for a in roots.simple_roots]


def check_regularity_suite(spec, seed: int = 0, samples: int = 10, equivalence_points: int = 100) -> list[CheckReport]:
    spec = as_spec(spec)
    basis, roots = build_algebra(spec)
    Q = contraction_for(basis)
    L = basis.labels
    l = spec.rank
    inv = hat_invariants(spec)
    table = GradientTable(inv.hatP)
    top = inv.hatP[-1]
    maxrank = Q.dim - l
    reports = []

    def rep(name, status, details="", witness=None, mode="sampled"):
        reports.append(CheckReport(f"regularity.{name}", status, details, witness, seed, mode))

    def kir_rank(X):
        return exact.rank(Q.kirillov_from_values(X))

    def divisor_point(i_simple: int, rng) -> list:
        """Random point of q* on the hyperplane X_{e-alpha_i} = 0."""
        y = random_coords(rng, Q.dim)
        y[basis.index[root_label(roots.simple_roots[i_simple], +1)]] = 0
        return y

    # (a) divisor witness for a_i >= 2
    big = [i for i, a in enumerate(roots.a_coeffs) if a >= 2]
    for i in big:
        lab = root_label(roots.simple_roots[i], -1)
        partials = [top.diff(v).restrict([lab]) for v in L]
        sym = all(not p.terms for p in partials)
        bad = None
        for s in range(samples):
            X = Q.pairing_values(divisor_point(i, rng_for(seed, "divisor", spec.name, i, s)))
            jr, kr = table.rank(X), kir_rank(X)
            if not (jr < l and kr < maxrank):
                bad = {"sample": s, "jacobian_rank": jr, "kirillov_rank": kr}
                break
        rep(f"divisor_alpha{i + 1}", _ok(sym and bad is None),
            f"a_{i + 1} = {roots.a_coeffs[i]}: dP-hat_l == 0 on {{{lab} = 0}}; "
            f"jacobian rank < {l} and Kirillov rank < {maxrank} at {samples} points", bad)

    # (b) subregular witnesses for type A
    if spec.family == "A":
        theta_idx = basis.index[root_label(roots.theta, +1)]
        pos_simple = _simple_labels(roots, +1)
        for j in range(l):
            u = [0] * Q.dim
            for i, lab in enumerate(pos_simple):
                if i != j:
                    u[basis.index[lab]] = 1
            bad = None
            for s in range(samples):
                rng = rng_for(seed, "subregular", spec.name, j, s)
                for _ in range(MAX_RESAMPLES + 1):
                    y = _dual_point_with_u(basis, Q, u, rng)
                    X = Q.pairing_values(y)
                    if X[theta_idx] != 0:
                        break
                r = table.rank(X)
                if r != l:
                    bad = {"sample": s, "jacobian_rank": r, "point": _vec_json(L, y)}
                    break
            rep(f"subregular_omit{j + 1}", _ok(bad is None),
                f"u = sum of e_alpha_i over i != {j + 1}: jacobian rank {l} at {samples} random xi", bad)

    # (c) sampled equivalence of the two regularity criteria
    n_div = equivalence_points * 2 // 5
    n_gen = equivalence_points - n_div
    counter = None
    stats = {"regular": 0, "singular": 0}
    for s in range(equivalence_points):
        rng = rng_for(seed, "equivalence", spec.name, s)
        if s < n_gen:
            y = random_coords(rng, Q.dim)
        else:
            y = divisor_point((s - n_gen) % l, rng)
        X = Q.pairing_values(y)
        kr, jr = kir_rank(X), table.rank(X)
        if (kr == maxrank) != (jr == l):
            counter = {"sample": s, "kirillov_rank": kr, "jacobian_rank": jr, "point": _vec_json(L, y)}
            break
        stats["regular" if kr == maxrank else "singular"] += 1
    rep("equivalence", _ok(counter is None),
        f"[Kirillov rank = {maxrank}] <=> [jacobian rank = {l}] at {equivalence_points} points "
        f"({n_gen} generic, {n_div} on hyperplanes); {stats['regular']} regular, {stats['singular']} not",
        counter)

    # (d) Kostant: F_i(x) independent <=> x regular, in g
    F = covariant_gradients(spec)
    witnesses = [("zero", [0] * basis.dim)]
    pos_simple = _simple_labels(roots, +1)
    reg_nil = [0] * basis.dim
    for lab in pos_simple:
        reg_nil[basis.index[lab]] = 1
    witnesses.append(("regular_nilpotent", reg_nil))
    for j, lab in enumerate(pos_simple):
        v = list(reg_nil)
        v[basis.index[lab]] = 0
        witnesses.append((f"omit_alpha{j + 1}", v))
        v = [0] * basis.dim
        v[basis.index[lab]] = 1
        witnesses.append((f"e_alpha{j + 1}", v))
    # semisimple element of t killed by alpha_1
    tvec = _cartan_kernel_point(basis, pos_simple[0])
    witnesses.append(("cartan_on_wall", tvec))
    for s in range(samples):
        witnesses.append((f"random{s}", random_coords(rng_for(seed, "kostant", spec.name, s), basis.dim)))
    bad = None
    seen = {"regular": 0, "singular": 0}
    for name, x in witnesses:
        vals = F.evaluate_all(x)
        indep = exact.rank(vals) == l
        reg = centralizer_dim(basis.from_vec(x), basis) == l
        seen["regular" if reg else "singular"] += 1
        if indep != reg:
            bad = {"witness": name, "point": _vec_json(L, x), "independent": indep, "regular": reg}
            break
    rep("kostant", _ok(bad is None),
        f"F_1(x)..F_l(x) independent <=> dim g^x = l on {len(witnesses)} elements "
        f"({seen['regular']} regular, {seen['singular']} not)", bad)
    return reports


def _cartan_kernel_point(basis, simple_label) -> list:
    """Nonzero Cartan element on which the given simple root vanishes."""
    vals = basis.root_values[simple_label]
    l = len(vals)
    ker = exact.nullspace([list(vals)], l)
    v = [0] * basis.dim
    if not ker:
        return v
    k = ker[0]
    den = 1
    for c in k:
        den = den * Fraction(c).denominator
    for a, t in enumerate(basis.cartan_labels):
        v[basis.index[t]] = exact.norm(k[a] * den)
    return v


# null cone ---------------------------------------------------------------------------

def sl_centralizer_formula(lam: Sequence[int]) -> int:
    """dim of the centralizer in sl_n of a nilpotent with Jordan type lam."""
    return sum(p * p for p in conjugate_partition(lam)) - 1


def check_nullcone_inequality(spec, seed: int = 0, nilpotents: Sequence[GVector] | None = None) -> list[CheckReport]:
    spec = as_spec(spec)
    basis, roots = build_algebra(spec)
    l = spec.rank
    P = restricted_covariants(spec)
    reports = []
    if nilpotents is None:
        if spec.family != "A":
            raise UnsupportedFamily("nilpotent representatives are built only for type A; pass a list")
        items = [(lam, jordan_nilpotent(lam, basis)) for lam in partitions(l + 1)]
    else:
        items = [(None, e) for e in nilpotents]
    for k, (lam, e) in enumerate(items):
        ev = basis.vec(e)
        if any(ev[basis.index[lab]] for lab in basis.labels if label_kind(lab) != "pos"):
            reports.append(CheckReport(f"nullcone.rep{k}", FAIL, "representative is not in u",
                                       e.to_json(), seed, "symbolic"))
            continue
        cdim = centralizer_dim(e, basis)
        span = exact.rank(P.evaluate_all(ev))
        ok = cdim + 2 * span >= 3 * l
        details = f"dim g^e + 2 rank(P(e)) = {cdim} + 2*{span} = {cdim + 2 * span} >= {3 * l}"
        if lam is not None:
            formula = sl_centralizer_formula(lam)
            ok = ok and formula == cdim
            details = f"partition {'+'.join(map(str, lam))}: " + details + f"; centralizer formula {formula}"
        name = f"nullcone.{'-'.join(map(str, lam))}" if lam is not None else f"nullcone.rep{k}"
        reports.append(CheckReport(name, _ok(ok), details, None if ok else e.to_json(), seed, "symbolic"))
    return reports


# highest components ---------------------------------------------------------------------

def _poly_rank(polys: Sequence[SparsePoly]) -> int:
    monos = sorted({m for p in polys for m in p.terms})
    return exact.rank([[p.terms.get(m, 0) for m in monos] for p in polys]) if monos else 0


def check_highest_components(spec, seed: int = 0) -> list[CheckReport]:
    spec = as_spec(spec)
    basis, roots = build_algebra(spec)
    inv = hat_invariants(spec)
    fs = inv.f
    L = basis.labels
    reports = []

    def rep(name, ok, details="", witness=None):
        reports.append(CheckReport(f"highest.{name}", _ok(ok), details, witness, seed, "symbolic"))

    off_u = [lab for lab in L if label_kind(lab) != "pos"]
    for i, (f, h) in enumerate(zip(fs, inv.hatP)):
        # the (0, d_i) part in S(b) x S(u^-) comes from the pure u-coordinate part of f
        pure = f.restrict(off_u)
        rep(f"no_pure_component_f{i + 1}", not pure.terms,
            f"f_{i + 1}^(0,{f.degree()}) == 0", None if not pure.terms else pure.to_json())
        hc = highest_component_coadj(f, basis)
        c = proportionality(hc, h)
        rep(f"coadj_f{i + 1}", c is not None and c != 0,
            f"highest component of f_{i + 1} = {c} * P-hat_{i + 1}" if c else "not proportional",
            None if c else {"highest": hc.to_json(), "hat": h.to_json()})
        ha = highest_component_adj(f, basis)
        cartan_only = set(ha.variables()) <= set(basis.cartan_labels)
        killed = all(not adjoint_derivation(ha, j, basis).terms for j in range(basis.dim))
        rep(f"adj_f{i + 1}", cartan_only and killed and bool(ha.terms),
            f"adjoint highest component of f_{i + 1} uses only Cartan coordinates and is Q-invariant",
            None if cartan_only and killed else {"poly": ha.to_json()})

    mono = monomial_top_invariant(spec)
    c = proportionality(inv.hatP[-1], mono)
    rep("monomial_top", c is not None and c != 0,
        f"P-hat_l = {c} * {mono!r}" if c else "P-hat_l is not a multiple of the monomial",
        None if c else {"hat": inv.hatP[-1].to_json(), "monomial": mono.to_json()})

    # Poincare spot check up to degree d_2
    d2 = roots.degrees[1] if len(roots.degrees) > 1 else roots.degrees[0]
    products = [((i,), fs[i]) for i in range(len(fs)) if fs[i].degree() <= d2]
    for i, j in combinations_with_replacement(range(len(fs)), 2):
        if fs[i].degree() + fs[j].degree() <= d2:
            products.append(((i, j), fs[i] * fs[j]))
    ok = True
    summary = []
    for n in sorted({p.degree() for _, p in products}):
        src = [p for _, p in products if p.degree() == n]
        r_src = _poly_rank(src)
        r_co = _poly_rank([highest_component_coadj(p, basis) for p in src])
        r_adj = _poly_rank([highest_component_adj(p, basis) for p in src])
        summary.append(f"deg {n}: {r_src}/{r_co}/{r_adj}")
        ok = ok and r_src == r_co == r_adj
    rep("poincare_spot", ok, "ranks of sources / coadj / adj highest components: " + ", ".join(summary))
    return reports


# running ------------------------------------------------------------------------------

def run_suites(spec, suites: Sequence[str] = SUITES, mode: str | None = None, seed: int = 0,
               samples: int = 25) -> list[CheckReport]:
    spec = as_spec(spec)
    mode = mode or default_mode(spec)
    out: list[CheckReport] = []
    for s in suites:
        out.extend(run_suite(spec, s, mode, seed, samples))
    return sorted(out, key=lambda r: r.name)


def run_suite(spec, suite: str, mode: str, seed: int, samples: int) -> list[CheckReport]:
    spec = as_spec(spec)
    if suite == "structure":
        return check_structure_suite(spec, seed)
    if suite == "invariance":
        return check_invariance_suite(spec, mode, seed, samples)
    if suite == "index":
        return check_index_and_degrees(spec, seed)
    if suite == "regularity":
        return check_regularity_suite(spec, seed)
    if suite == "nullcone":
        return check_nullcone_inequality(spec, seed)
    if suite == "highest":
        return check_highest_components(spec, seed)
    raise ValueError(f"unknown suite {suite!r}")


def report_document(spec, mode: str, seed: int, checks: Sequence[CheckReport]) -> dict:
    spec = as_spec(spec)
    return {"spec": spec.to_json(), "mode": mode, "seed": seed,
            "checks": [c.to_json() for c in sorted(checks, key=lambda r: r.name)]}


def overall_status(checks: Sequence[CheckReport]) -> str:
    statuses = {c.status for c in checks}
    if FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=1)
