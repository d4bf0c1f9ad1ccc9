"""Dense exact linear algebra over Q and over Q[delta].

Rational matrices use ordinary Gaussian elimination on Fractions.  Polynomial
matrices use Bareiss fraction-free elimination, so every intermediate entry
stays a polynomial and the rank is the rank over Q(delta).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .coeff import Poly


def _is_poly_matrix(rows) -> bool:
    return any(isinstance(x, Poly) for row in rows for x in row)


def rref(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    if _is_poly_matrix(rows):
        return poly_rank(rows)
    return len(rref(rows)[1])


def poly_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q(delta) by Bareiss elimination."""
    m = [[x if isinstance(x, Poly) else Poly.constant(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    prev = Poly.constant(1)
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, nrows) if not m[k][c].is_zero()), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for k in range(r + 1, nrows):
            a = m[k][c]
            m[k] = [(piv * m[k][j] - a * m[r][j]).exact_div(prev) for j in range(ncols)]
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def determinant(rows: Sequence[Sequence]):
    """Determinant; polynomial entries give a polynomial."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    poly = _is_poly_matrix(rows)
    one = Poly.constant(1) if poly else Fraction(1)
    m = [[(x if isinstance(x, Poly) else Poly.constant(x)) if poly else Fraction(x) for x in row] for row in rows]
    sign = 1
    prev = one
    for c in range(n):
        p = next((k for k in range(c, n) if m[k][c] != 0), None)
        if p is None:
            return Poly.constant(0) if poly else Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        for k in range(c + 1, n):
            a = m[k][c]
            new = []
            for j in range(n):
                v = piv * m[k][j] - a * m[c][j]
                new.append(v.exact_div(prev) if poly else v / prev)
            m[k] = new
        prev = piv
    return m[n - 1][n - 1] * sign


def inverse(rows: Sequence[Sequence]) -> list:
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list:
    """Basis of {x : rows x = 0} over Q."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -red[r][f]
        out.append(v)
    return out


class ColumnSolver:
    """Express vectors in the span of fixed rational columns.

    The columns must be linearly independent.  Targets may have polynomial
    entries; the solution is then polynomial as well.
    """

    def __init__(self, columns: Sequence[Sequence], dim: int | None = None):
        self.ncols = len(columns)
        self.dim = len(columns[0]) if columns else (dim or 0)
        rows = [[Fraction(columns[j][i]) for j in range(self.ncols)] for i in range(self.dim)]
        if self.ncols:
            aug = [row + [Fraction(int(i == k)) for k in range(self.dim)] for i, row in enumerate(rows)]
            red, piv = rref(aug)
            if piv[:self.ncols] != list(range(self.ncols)):
                raise ValueError("columns are linearly dependent")
            # rows 0..ncols-1 of the right block give the solution map,
            # remaining rows give the consistency conditions
            self.solve_rows = [red[k][self.ncols:] for k in range(self.ncols)]
            self.check_rows = [red[k][self.ncols:] for k in range(self.ncols, self.dim)]
        else:
            self.solve_rows = []
            self.check_rows = [[Fraction(int(i == k)) for k in range(self.dim)] for i in range(self.dim)]

    def solve(self, target: Sequence, zero=Fraction(0)) -> list:
        sparse = [(k, x) for k, x in enumerate(target) if x]
        for row in self.check_rows:
            acc = zero
            for k, x in sparse:
                if row[k]:
                    acc = acc + x * row[k]
            if acc:
                raise ValueError("vector is not in the span")
        out = []
        for row in self.solve_rows:
            acc = zero
            for k, x in sparse:
                if row[k]:
                    acc = acc + x * row[k]
            out.append(acc)
        return out


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], zero=Fraction(0)) -> list:
    if not a:
        return []
    inner = len(b)
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        new = []
        for j in range(ncols):
            acc = zero
            for k in range(inner):
                x = row[k]
                if x:
                    y = b[k][j]
                    if y:
                        acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out
