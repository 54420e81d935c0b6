"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives over a fixed *universe* of variable labels (a tuple of
strings).  Monomials are stored as dense exponent tuples aligned with the
universe, which keeps multiplication a tuple-wise add; coefficients are ints or
Fractions and zero terms are never stored.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import exact
from .errors import MissingCoordinate, UniverseMismatch, UnknownVariable


class SparsePoly:
    __slots__ = ("universe", "terms", "_index")

    def __init__(self, universe: Sequence[str], terms: Mapping[tuple, object] | None = None,
                 _index: dict | None = None):
        self.universe = tuple(universe)
        self._index = _index if _index is not None else {v: i for i, v in enumerate(self.universe)}
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c != 0:
                    clean[mono] = exact.norm(c)
        self.terms = clean

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, universe):
        return cls(universe)

    @classmethod
    def const(cls, universe, c):
        universe = tuple(universe)
        return cls(universe, {(0,) * len(universe): c})

    @classmethod
    def var(cls, universe, label, coeff=1):
        universe = tuple(universe)
        if label not in universe:
            raise UnknownVariable(label)
        mono = tuple(int(v == label) for v in universe)
        return cls(universe, {mono: coeff})

    @classmethod
    def from_dict(cls, universe, terms: Mapping[Mapping[str, int] | tuple, object]):
        """Build from ``{frozenset-able label->exponent mapping: coeff}`` pairs."""
        universe = tuple(universe)
        index = {v: i for i, v in enumerate(universe)}
        out: dict[tuple, object] = {}
        for mono, c in terms.items():
            items = mono.items() if isinstance(mono, Mapping) else mono
            e = [0] * len(universe)
            for lab, k in items:
                if lab not in index:
                    raise UnknownVariable(lab)
                e[index[lab]] += k
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return cls(universe, out, index)

    def _new(self, terms):
        p = SparsePoly.__new__(SparsePoly)
        p.universe = self.universe
        p._index = self._index
        p.terms = terms
        return p

    def _check(self, other: SparsePoly):
        if other.universe != self.universe:
            raise UniverseMismatch("polynomials live over different variable universes")

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return self + SparsePoly.const(self.universe, other)
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v == 0:
                terms.pop(m, None)
            else:
                terms[m] = exact.norm(v)
        return self._new(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            if other == 0:
                return self._new({})
            return self._new({m: exact.norm(c * other) for m, c in self.terms.items()})
        self._check(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        out: dict[tuple, object] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple([x + y for x, y in zip(ma, mb)])
                out[m] = get(m, 0) + ca * cb
        return self._new({m: exact.norm(c) for m, c in out.items() if c != 0})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(self.universe, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.universe == other.universe and self.terms == other.terms
        if other == 0:
            return not self.terms
        return self == SparsePoly.const(self.universe, other)

    def __hash__(self):
        return hash((self.universe, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # inspection ---------------------------------------------------------

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def variables(self) -> list[str]:
        used = [False] * len(self.universe)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return [v for v, u in zip(self.universe, used) if u]

    def mono_dict(self, mono: tuple) -> dict[str, int]:
        return {self.universe[i]: e for i, e in enumerate(mono) if e}

    def items(self):
        """(label->exponent dict, coefficient) pairs in canonical order."""
        return [(self.mono_dict(m), self.terms[m]) for m in self.sorted_monomials()]

    def coefficient(self, mono: Mapping[str, int]):
        e = [0] * len(self.universe)
        for lab, k in mono.items():
            e[self._index[lab]] = k
        return self.terms.get(tuple(e), 0)

    def sorted_monomials(self) -> list[tuple]:
        """Graded lexicographic order over the sorted labels, highest first."""
        order = sorted(range(len(self.universe)), key=lambda i: self.universe[i])

        def key(m):
            return (sum(m), tuple(m[i] for i in order))

        return sorted(self.terms, key=key, reverse=True)

    def leading(self) -> tuple[tuple, object]:
        m = self.sorted_monomials()[0]
        return m, self.terms[m]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in self.items():
            factors = [f"{v}^{e}" if e > 1 else v for v, e in mono.items()]
            head = [] if factors and c == 1 else ["-"] if factors and c == -1 else [exact.rational_str(c)]
            parts.append(("".join(head) + "*".join(factors)) if head == ["-"] else "*".join(head + factors))
        return " + ".join(parts)

    # calculus -----------------------------------------------------------

    def diff(self, label: str) -> SparsePoly:
        i = self._index.get(label)
        if i is None:
            raise UnknownVariable(label)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = exact.norm(c * e)
        return self._new(out)

    def gradient(self) -> list[SparsePoly]:
        return [self.diff(v) for v in self.universe]

    def eval(self, point: Mapping[str, object]):
        vals = []
        used = self.variables()
        for v in used:
            if v not in point:
                raise MissingCoordinate(v)
        for v in self.universe:
            vals.append(point.get(v, 0))
        return self.eval_vector(vals)

    def eval_vector(self, vals: Sequence):
        """Evaluate at a point given as a value list aligned with the universe."""
        total = 0
        powcache: dict[tuple[int, int], object] = {}
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    if e == 1:
                        t = t * vals[i]
                    else:
                        key = (i, e)
                        p = powcache.get(key)
                        if p is None:
                            p = powcache[key] = vals[i] ** e
                        t = t * p
                    if t == 0:
                        break
            total += t
        return exact.norm(total)

    def substitute(self, images: Mapping[str, SparsePoly], universe: Sequence[str] | None = None) -> SparsePoly:
        """Replace variables by polynomials; unmentioned variables stay as themselves.

        ``universe`` is the universe of the images (defaults to this one).
        """
        universe = tuple(universe) if universe is not None else self.universe
        index = {v: i for i, v in enumerate(universe)}
        imgs = []
        for v in self.universe:
            if v in images:
                img = images[v]
                if img.universe != universe:
                    raise UniverseMismatch("substitution image over a foreign universe")
                imgs.append(img)
            else:
                imgs.append(SparsePoly.var(universe, v) if v in index else None)
        powcache: dict[tuple[int, int], SparsePoly] = {}
        result = SparsePoly(universe, {}, index)
        one = SparsePoly.const(universe, 1)
        for m, c in self.terms.items():
            term = one * c
            for i, e in enumerate(m):
                if not e:
                    continue
                if imgs[i] is None:
                    raise UnknownVariable(self.universe[i])
                key = (i, e)
                p = powcache.get(key)
                if p is None:
                    p = powcache[key] = imgs[i] ** e
                term = term * p
                if not term.terms:
                    break
            result = result + term
        return result

    def restrict(self, zero_vars: Iterable[str]) -> SparsePoly:
        """Set the given variables to zero."""
        idx = [self._index[v] for v in zero_vars if v in self._index]
        return self._new({m: c for m, c in self.terms.items() if not any(m[i] for i in idx)})

    def homogeneous_part(self, d: int) -> SparsePoly:
        return self._new({m: c for m, c in self.terms.items() if sum(m) == d})

    # serialization --------------------------------------------------------

    def to_json(self) -> list[dict]:
        return [{"coeff": exact.rational_str(c), "mono": {k: mono[k] for k in sorted(mono)}}
                for mono, c in self.items()]

    @classmethod
    def from_json(cls, universe, data: list[dict]) -> SparsePoly:
        return cls.from_dict(universe, {tuple(d["mono"].items()): Fraction(d["coeff"]) for d in data})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


class Bigrading:
    """Partition of a variable universe into a *first* and a *second* class."""

    def __init__(self, universe: Sequence[str], second: Iterable[str]):
        self.universe = tuple(universe)
        second = set(second)
        unknown = second - set(self.universe)
        if unknown:
            raise UnknownVariable(sorted(unknown)[0])
        self.second = frozenset(second)
        self.first = frozenset(v for v in self.universe if v not in second)
        self._mask = tuple(v in self.second for v in self.universe)

    def bidegree(self, mono: tuple) -> tuple[int, int]:
        j = sum(e for e, s in zip(mono, self._mask) if s)
        return sum(mono) - j, j


# module-level operations ----------------------------------------------------

def poly_arith(p: SparsePoly, q: SparsePoly | None, op: str, scalar=None) -> SparsePoly:
    """``op`` is ``"add"``, ``"mul"`` or ``"scale"`` (the last uses ``scalar``)."""
    if op == "add":
        return p + q
    if op == "mul":
        return p * q
    if op == "scale":
        return p * Fraction(scalar)
    raise ValueError(f"unknown op {op!r}")


def poly_diff(p: SparsePoly, var: str) -> SparsePoly:
    return p.diff(var)


def poly_eval(p: SparsePoly, point: Mapping[str, object]):
    return p.eval(point)


def bigrade_components(p: SparsePoly, grading: Bigrading) -> dict[tuple[int, int], SparsePoly]:
    if grading.universe != p.universe:
        raise UniverseMismatch("grading over a different universe")
    parts: dict[tuple[int, int], dict] = {}
    for m, c in p.terms.items():
        parts.setdefault(grading.bidegree(m), {})[m] = c
    return {k: p._new(v) for k, v in sorted(parts.items())}


def jacobian_matrix(polys: Sequence[SparsePoly], point: Mapping[str, object] | Sequence) -> list[list]:
    if not polys:
        return []
    universe = polys[0].universe
    for p in polys:
        if p.universe != universe:
            raise UniverseMismatch("jacobian of polynomials over different universes")
    if isinstance(point, Mapping):
        missing = [v for v in universe if v not in point]
        if missing:
            raise MissingCoordinate(missing[0])
        vals = [point[v] for v in universe]
    else:
        vals = list(point)
    return [[p.diff(v).eval_vector(vals) for v in universe] for p in polys]


def jacobian_rank(polys: Sequence[SparsePoly], point: Mapping[str, object] | Sequence) -> int:
    """Exact rank of [d p_k / d var_j] at ``point``."""
    if not polys:
        return 0
    return exact.rank(jacobian_matrix(polys, point))


class GradientTable:
    """Precomputed partial derivatives of a list of polynomials.

    Used when the same Jacobian has to be evaluated at many points.
    """

    def __init__(self, polys: Sequence[SparsePoly]):
        self.polys = list(polys)
        self.partials = [[p.diff(v) for v in p.universe] for p in self.polys]

    def matrix(self, vals: Sequence) -> list[list]:
        return [[d.eval_vector(vals) if d.terms else 0 for d in row] for row in self.partials]

    def rank(self, vals: Sequence) -> int:
        return exact.rank(self.matrix(vals))
