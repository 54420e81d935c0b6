"""Classical simple Lie algebras as exact matrix algebras.

Types B, C, D use the antidiagonal model ``{x : x^T J + J x = 0}`` so that the
upper-triangular part of the algebra is a Borel subalgebra.  Basis labels:

* ``t1 .. tl``     Cartan elements ``[e_{alpha_i}, e_{-alpha_i}]``
* ``e+c1,...,cl``  positive root vector, root = sum c_i alpha_i
* ``e-c1,...,cl``  its transpose, a negative root vector
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import exact
from .errors import BasisMismatch, UnsupportedFamily, UnsupportedRank

FAMILIES = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedFamily(f"family must be one of {FAMILIES}, got {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise UnsupportedRank(
                f"{self.family}{self.rank}: rank must be >= {_MIN_RANK[self.family]}")

    @property
    def matrix_dim(self) -> int:
        l = self.rank
        return {"A": l + 1, "B": 2 * l + 1, "C": 2 * l, "D": 2 * l}[self.family]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "matrix_dim": self.matrix_dim}

    @classmethod
    def parse(cls, text: str) -> "AlgebraSpec":
        return cls(text[0].upper(), int(text[1:]))


def as_spec(spec) -> AlgebraSpec:
    if isinstance(spec, AlgebraSpec):
        return spec
    if isinstance(spec, str):
        return AlgebraSpec.parse(spec)
    family, rank = spec
    return AlgebraSpec(family, rank)


# label helpers --------------------------------------------------------------

def root_label(coeffs: Sequence[int], sign: int = 1) -> str:
    return ("e+" if sign > 0 else "e-") + ",".join(str(c) for c in coeffs)


def label_kind(label: str) -> str:
    """``"cartan"``, ``"pos"`` or ``"neg"``."""
    if label.startswith("t"):
        return "cartan"
    if label.startswith("e+"):
        return "pos"
    if label.startswith("e-"):
        return "neg"
    raise BasisMismatch(label)


def label_root(label: str) -> tuple[int, ...]:
    return tuple(int(c) for c in label[2:].split(","))


def opposite(label: str) -> str:
    kind = label_kind(label)
    if kind == "pos":
        return "e-" + label[2:]
    if kind == "neg":
        return "e+" + label[2:]
    return label


class GVector:
    """Finitely supported vector, label -> exact rational."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[str, object] | None = None):
        self.coords = {k: exact.norm(Fraction(v) if isinstance(v, str) else v)
                       for k, v in (coords or {}).items() if v != 0}

    def __getitem__(self, label):
        return self.coords.get(label, 0)

    def items(self):
        return self.coords.items()

    def support(self) -> set[str]:
        return set(self.coords)

    def __add__(self, other: "GVector") -> "GVector":
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, 0) + v
        return type(self)(out)

    def __sub__(self, other):
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __mul__(self, c):
        return type(self)({k: v * c for k, v in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, GVector):
            return self.coords == other.coords
        if other == 0:
            return not self.coords
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def __bool__(self):
        return bool(self.coords)

    def __repr__(self):
        inner = ", ".join(f"{k}: {exact.rational_str(v)}" for k, v in self.coords.items())
        return f"{type(self).__name__}({{{inner}}})"

    def to_json(self) -> dict:
        return {k: exact.rational_str(v) for k, v in sorted(self.coords.items())}


@dataclass(frozen=True)
class RootDatum:
    simple_roots: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    theta: tuple[int, ...]
    a_coeffs: tuple[int, ...]
    coxeter: int
    exponents: tuple[int, ...]
    degrees: tuple[int, ...]
    height_exponents: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "simple_roots": [list(r) for r in self.simple_roots],
            "positive_roots": [list(r) for r in self.positive_roots],
            "theta": list(self.theta),
            "a_coeffs": list(self.a_coeffs),
            "coxeter": self.coxeter,
            "exponents": list(self.exponents),
            "degrees": list(self.degrees),
        }


def family_exponents(spec: AlgebraSpec) -> tuple[int, ...]:
    l = spec.rank
    if spec.family == "A":
        return tuple(range(1, l + 1))
    if spec.family in "BC":
        return tuple(range(1, 2 * l, 2))
    return tuple(sorted(list(range(1, 2 * l - 2, 2)) + [l - 1]))


class StructuredBasis:
    """Basis of g adapted to g = t + u + u^-, with trace form and structure constants."""

    def __init__(self, spec: AlgebraSpec, labels: Sequence[str], matrices: Sequence, J=None):
        self.spec = spec
        self.labels = tuple(labels)
        self.matrices = [tuple(tuple(exact.norm(c) for c in row) for row in M) for M in matrices]
        self.J = J
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.dim = len(self.labels)
        self.rank = spec.rank
        self.n = spec.matrix_dim
        self.cartan_labels = tuple(lab for lab in self.labels if label_kind(lab) == "cartan")
        self.pos_labels = tuple(lab for lab in self.labels if label_kind(lab) == "pos")
        self.neg_labels = tuple(lab for lab in self.labels if label_kind(lab) == "neg")
        self.b_labels = self.cartan_labels + self.pos_labels
        self.bminus_labels = self.cartan_labels + self.neg_labels
        self._prepare_coordinates()
        self.gram = [[exact.norm(_trace_prod(A, B)) for B in self.matrices] for A in self.matrices]
        self.gram_inv = exact.inverse(self.gram)
        self.structure = self._structure_constants()
        # gamma(t_i) for every root label, read off [t_i, e_gamma] = gamma(t_i) e_gamma
        self.root_values = {}
        for lab in self.pos_labels + self.neg_labels:
            k = self.index[lab]
            self.root_values[lab] = tuple(self.structure[self.index[t]][k].get(k, 0)
                                          for t in self.cartan_labels)

    # coordinates --------------------------------------------------------------

    def _prepare_coordinates(self):
        self._pivots = {}
        for lab in self.pos_labels + self.neg_labels:
            M = self.matrices[self.index[lab]]
            self._pivots[lab] = next((i, j) for i in range(self.n) for j in range(self.n) if M[i][j] != 0)
        T = [[self.matrices[self.index[t]][k][k] for t in self.cartan_labels] for k in range(self.rank)]
        self._cartan_solve = exact.inverse(T)

    def coords_of(self, M, check: bool = True) -> list:
        """Coordinates of a matrix in g, as a list aligned with ``labels``."""
        out = [0] * self.dim
        diag = [M[k][k] for k in range(self.rank)]
        for a, lab in enumerate(self.cartan_labels):
            out[self.index[lab]] = exact.norm(sum(Fraction(self._cartan_solve[a][k]) * diag[k]
                                                  for k in range(self.rank)))
        for lab, (i, j) in self._pivots.items():
            v = M[i][j]
            if v:
                out[self.index[lab]] = exact.norm(Fraction(v) / self.matrices[self.index[lab]][i][j])
        if check and self.matrix_of_vec(out) != [list(map(exact.norm, row)) for row in M]:
            raise BasisMismatch("matrix does not lie in the algebra")
        return out

    def matrix_of_vec(self, vec: Sequence) -> list[list]:
        n = self.n
        out = [[0] * n for _ in range(n)]
        for c, M in zip(vec, self.matrices):
            if c == 0:
                continue
            for i in range(n):
                Mi = M[i]
                oi = out[i]
                for j in range(n):
                    if Mi[j]:
                        oi[j] += c * Mi[j]
        return [[exact.norm(v) for v in row] for row in out]

    def vec(self, x: GVector) -> list:
        out = [0] * self.dim
        for lab, c in x.items():
            i = self.index.get(lab)
            if i is None:
                raise BasisMismatch(lab)
            out[i] = c
        return out

    def from_vec(self, vec: Sequence, cls=GVector) -> GVector:
        return cls({lab: c for lab, c in zip(self.labels, vec) if c != 0})

    def matrix_of(self, x: GVector) -> list[list]:
        return self.matrix_of_vec(self.vec(x))

    def from_matrix(self, M) -> GVector:
        return self.from_vec(self.coords_of(M))

    def element(self, label: str, coeff=1) -> GVector:
        if label not in self.index:
            raise BasisMismatch(label)
        return GVector({label: coeff})

    # structure ----------------------------------------------------------------

    def _structure_constants(self) -> list[list[dict[int, object]]]:
        d = self.dim
        S: list[list[dict]] = [[{} for _ in range(d)] for _ in range(d)]
        for j in range(d):
            for k in range(j + 1, d):
                A, B = self.matrices[j], self.matrices[k]
                C = _commutator(A, B)
                v = self.coords_of(C, check=True)
                S[j][k] = {m: c for m, c in enumerate(v) if c != 0}
                S[k][j] = {m: -c for m, c in S[j][k].items()}
        return S

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
        """Matrix of ad(x) in the basis (column k = [x, e_k])."""
        cols = [self.bracket_vec(x, [int(i == k) for i in range(self.dim)]) for k in range(self.dim)]
        return [[cols[k][m] for k in range(self.dim)] for m in range(self.dim)]

    def form_vec(self, x: Sequence, y: Sequence):
        total = 0
        for j, xj in enumerate(x):
            if xj:
                row = self.gram[j]
                for k, yk in enumerate(y):
                    if yk and row[k]:
                        total += xj * yk * row[k]
        return exact.norm(total)

    def root_value(self, label: str, cartan_vec: Sequence):
        """gamma(t) for the root of ``label`` and t given by Cartan coordinates."""
        return exact.norm(sum(Fraction(a) * b for a, b in zip(self.root_values[label], cartan_vec)))

    def in_algebra(self, M) -> bool:
        n = self.n
        f = self.spec.family
        if f == "A":
            return sum(M[i][i] for i in range(n)) == 0
        J = self.J
        MT = [[M[j][i] for j in range(n)] for i in range(n)]
        lhs = exact.matmul(MT, J)
        rhs = exact.matmul(J, M)
        return all(lhs[i][j] + rhs[i][j] == 0 for i in range(n) for j in range(n))

    def to_json(self) -> dict:
        return {
            "spec": self.spec.to_json(),
            "labels": list(self.labels),
            "cartan_labels": list(self.cartan_labels),
            "positive_labels": list(self.pos_labels),
            "negative_labels": list(self.neg_labels),
            "matrices": {lab: [[exact.rational_str(c) for c in row] for row in M]
                         for lab, M in zip(self.labels, self.matrices)},
            "gram": [[exact.rational_str(c) for c in row] for row in self.gram],
        }


def _trace_prod(A, B):
    n = len(A)
    return sum(A[i][k] * B[k][i] for i in range(n) for k in range(n) if A[i][k] and B[k][i])


def _commutator(A, B):
    AB = exact.matmul(A, B)
    BA = exact.matmul(B, A)
    n = len(A)
    return [[AB[i][j] - BA[i][j] for j in range(n)] for i in range(n)]


def _elementary(n, i, j):
    M = [[0] * n for _ in range(n)]
    M[i][j] = 1
    return M


def _antidiagonal_form(spec: AlgebraSpec):
    n, l = spec.matrix_dim, spec.rank
    J = [[0] * n for _ in range(n)]
    for i in range(n):
        J[i][n - 1 - i] = -1 if (spec.family == "C" and i >= l) else 1
    return J


def _upper_root_vectors(spec: AlgebraSpec, J):
    """Root vectors of g spanned by upper-triangular matrix units, with their weights."""
    n, l = spec.matrix_dim, spec.rank
    if spec.family == "A":
        diag_basis = [[int(i == k) - int(i == k + 1) for i in range(n)] for k in range(l)]
    else:
        diag_basis = [[int(i == k) - int(i == n - 1 - k) for i in range(n)] for k in range(l)]
    Jinv = exact.inverse(J) if J is not None else None
    found = {}
    for i in range(n):
        for j in range(i + 1, n):
            E = _elementary(n, i, j)
            if spec.family == "A":
                X = E
            else:
                ET = _elementary(n, j, i)
                Y = exact.matmul(exact.matmul(Jinv, ET), J)
                X = [[E[a][b] - Y[a][b] for b in range(n)] for a in range(n)]
            g = exact.content_gcd(c for row in X for c in row)
            if g == 0:
                continue
            X = [[exact.norm(Fraction(c, g)) for c in row] for row in X]
            piv = next(c for row in X for c in row if c != 0)
            if piv < 0:
                X = [[-c for c in row] for row in X]
            weight = tuple(d[i] - d[j] for d in diag_basis)
            if weight not in found:
                found[weight] = ((i, j), X)
    return found


@lru_cache(maxsize=None)
def _build(spec: AlgebraSpec) -> tuple[StructuredBasis, RootDatum]:
    n, l = spec.matrix_dim, spec.rank
    J = _antidiagonal_form(spec) if spec.family != "A" else None
    roots = _upper_root_vectors(spec, J)
    weights = set(roots)
    simple = [w for w in weights
              if not any(tuple(a - b for a, b in zip(w, v)) in weights for v in weights)]
    simple.sort(key=lambda w: roots[w][0])
    if len(simple) != l:
        raise AssertionError(f"found {len(simple)} simple roots for {spec.name}")
    ST = [[s[k] for s in simple] for k in range(l)]
    coeff_of = {}
    for w in weights:
        c = exact.solve(ST, list(w))
        coeff_of[w] = tuple(int(x) for x in c)
    pos = sorted(weights, key=lambda w: (sum(coeff_of[w]), tuple(-c for c in coeff_of[w])))
    pos_coeffs = [coeff_of[w] for w in pos]

    pos_mats = [roots[w][1] for w in pos]
    neg_mats = [[[M[j][i] for j in range(n)] for i in range(n)] for M in pos_mats]
    by_coeff = dict(zip(pos_coeffs, zip(pos_mats, neg_mats)))
    cartan = []
    for k in range(l):
        unit = tuple(int(i == k) for i in range(l))
        E, F = by_coeff[unit]
        cartan.append(_commutator(E, F))

    labels = [f"t{k + 1}" for k in range(l)]
    labels += [root_label(c, +1) for c in pos_coeffs]
    labels += [root_label(c, -1) for c in pos_coeffs]
    basis = StructuredBasis(spec, labels, cartan + pos_mats + neg_mats, J=J)

    theta = max(pos_coeffs, key=sum)
    heights = [sum(c) for c in pos_coeffs]
    counts = [heights.count(h) for h in range(1, max(heights) + 1)]
    # exponents = dual partition of the height distribution of positive roots
    height_exp = tuple(sorted(h for h in range(1, len(counts) + 1)
                              for _ in range(counts[h - 1] - (counts[h] if h < len(counts) else 0))))
    exps = family_exponents(spec)
    datum = RootDatum(
        simple_roots=tuple(tuple(int(i == k) for i in range(l)) for k in range(l)),
        positive_roots=tuple(pos_coeffs),
        theta=theta,
        a_coeffs=theta,
        coxeter=sum(theta) + 1,
        exponents=exps,
        degrees=tuple(m + 1 for m in exps),
        height_exponents=height_exp,
    )
    return basis, datum


def build_algebra(spec) -> tuple[StructuredBasis, RootDatum]:
    """Structured basis and root datum of the classical algebra ``spec``."""
    return _build(as_spec(spec))


def bracket_g(x: GVector, y: GVector, basis: StructuredBasis) -> GVector:
    return basis.from_vec(basis.bracket_vec(basis.vec(x), basis.vec(y)))


def trace_form(x: GVector, y: GVector, basis: StructuredBasis):
    return basis.form_vec(basis.vec(x), basis.vec(y))


def project_negative(x: GVector) -> GVector:
    return type(x)({k: v for k, v in x.items() if label_kind(k) == "neg"})


def project_b(x: GVector) -> GVector:
    return type(x)({k: v for k, v in x.items() if label_kind(k) != "neg"})


def centralizer_dim(x: GVector, basis: StructuredBasis) -> int:
    return basis.dim - exact.rank(basis.ad_matrix(basis.vec(x)))


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of n in decreasing lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def conjugate_partition(lam: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(1 for p in lam if p > k) for k in range(max(lam, default=0)))


def jordan_nilpotent(lam: Sequence[int], basis: StructuredBasis) -> GVector:
    """Upper-triangular Jordan form with block sizes ``lam`` (type A)."""
    n = basis.n
    M = [[0] * n for _ in range(n)]
    start = 0
    for size in lam:
        for i in range(start, start + size - 1):
            M[i][i + 1] = 1
        start += size
    return basis.from_matrix(M)


def nilpotent_representatives(spec) -> list[GVector]:
    spec = as_spec(spec)
    if spec.family != "A":
        raise UnsupportedFamily("nilpotent representatives are only provided for type A")
    basis, _ = build_algebra(spec)
    return [jordan_nilpotent(lam, basis) for lam in partitions(spec.rank + 1)]


def dumps_algebra(spec) -> str:
    basis, roots = build_algebra(spec)
    doc = basis.to_json()
    doc["roots"] = roots.to_json()
    return json.dumps(doc, sort_keys=True, indent=1)
