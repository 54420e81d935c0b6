"""Exact linear algebra over the rationals.

Scalars are Python ``int`` or :class:`fractions.Fraction`; a matrix is a list of
rows.  Ranks and determinants use fraction-free (Bareiss) elimination on
integer rows, so no intermediate value ever leaves the integers.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

Scalar = "int | Fraction"


def norm(c):
    """Return ``c`` as an int when it is integral, else as a Fraction."""
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return c


def as_rational(c) -> Fraction:
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


def rational_str(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row by the lcm of its denominators (row space unchanged)."""
    den = 1
    for c in row:
        if isinstance(c, Fraction) and c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [int(c) for c in row]
    return [int(c * den) for c in row]


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place fraction-free elimination; returns (rank, sign-adjusted last pivot)."""
    m = len(rows)
    r = 0
    prev = 1
    sign = 1
    for c in range(ncols):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            sign = -sign
        pr = rows[r]
        p = pr[c]
        for i in range(r + 1, m):
            ri = rows[i]
            a = ri[c]
            if a == 0:
                if p != prev:
                    for j in range(c + 1, ncols):
                        ri[j] = ri[j] * p // prev
                ri[c] = 0
                continue
            for j in range(c + 1, ncols):
                ri[j] = (ri[j] * p - a * pr[j]) // prev
            ri[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def rank(matrix: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix."""
    rows = [integer_row(row) for row in matrix]
    rows = [row for row in rows if any(row)]
    if not rows:
        return 0
    return _bareiss(rows, len(rows[0]))[0]


def det(matrix: Sequence[Sequence]):
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if n == 0:
        return 1
    dens = 1
    rows = []
    for row in matrix:
        d = 1
        for c in row:
            if isinstance(c, Fraction):
                d = lcm(d, c.denominator)
        dens *= d
        rows.append([int(c * d) for c in row])
    r, last = _bareiss(rows, n)
    if r < n:
        return 0
    return norm(Fraction(last, dens))


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form with its pivot columns."""
    rows = [[Fraction(c) for c in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [ri[j] - f * rr[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : matrix v = 0}."""
    if ncols is None:
        ncols = len(matrix[0])
    R, pivots = rref(matrix) if matrix else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(A: Sequence[Sequence], b: Sequence) -> list:
    """Unique solution of the square system A x = b."""
    n = len(A)
    aug = [list(A[i]) + [b[i]] for i in range(n)]
    R, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular system")
    return [norm(R[i][n]) for i in range(n)]


def inverse(A: Sequence[Sequence]) -> list[list]:
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("singular matrix")
    return [[norm(v) for v in R[i][n:]] for i in range(n)]


def matmul(A, B, zero=0):
    """Matrix product over any ring whose elements support + and *."""
    n, m, p = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                a = Ai[k]
                if a is zero or a == 0:
                    continue
                b = B[k][j]
                if b is zero or b == 0:
                    continue
                acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def pfaffian(M, zero=0, one=1, is_zero: Callable | None = None):
    """Pfaffian of a skew-symmetric matrix over any commutative ring.

    Expansion along the first remaining row, memoised on the index set.
    Works for rational entries as well as polynomial entries.
    """
    n = len(M)
    if n % 2:
        return zero
    if is_zero is None:
        is_zero = lambda v: v == 0  # noqa: E731
    memo: dict[tuple[int, ...], object] = {}

    def pf(idx: tuple[int, ...]):
        if not idx:
            return one
        if idx in memo:
            return memo[idx]
        i = idx[0]
        rest = idx[1:]
        acc = zero
        for k, j in enumerate(rest):
            a = M[i][j]
            if is_zero(a):
                continue
            sub = pf(rest[:k] + rest[k + 1:])
            term = a * sub
            acc = acc + term if k % 2 == 0 else acc - term
        memo[idx] = acc
        return acc

    return pf(tuple(range(n)))


def content_gcd(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, int(v))
    return g
