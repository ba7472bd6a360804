"""Exact rational linear algebra: dense matrices, inversion, products.

Scalars are fractions.Fraction throughout, so every value is an exact
rational in lowest terms with a positive denominator. There is no
floating point anywhere in this package.
"""

from fractions import Fraction
from math import lcm

Rational = Fraction

__all__ = [
    "Rational",
    "RationalMatrix",
    "DimensionMismatchError",
    "SingularMatrixError",
    "identity",
    "mat_det",
    "mat_invert",
    "mat_mul",
    "mat_vec_mul",
    "hadamard",
]


class DimensionMismatchError(ValueError):
    """Operands have incompatible shapes."""


class SingularMatrixError(ArithmeticError):
    """Elimination found no nonzero pivot in some column."""


class RationalMatrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise DimensionMismatchError("ragged rows: %s" % sorted(widths))
        if not self.rows or not self.rows[0]:
            raise DimensionMismatchError("matrix needs at least one entry")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows)) if self.rows else RationalMatrix(())

    def __repr__(self):
        return "RationalMatrix(%d x %d)" % (self.nrows, self.ncols)


def identity(n: int) -> RationalMatrix:
    return RationalMatrix(
        [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    )


def mat_vec_mul(m: RationalMatrix, v) -> tuple:
    """Exact matrix-vector product m @ v."""
    v = tuple(Fraction(x) for x in v)
    if m.ncols != len(v):
        raise DimensionMismatchError(
            "matrix has %d columns, vector has %d entries" % (m.ncols, len(v))
        )
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m.rows)


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.ncols != b.nrows:
        raise DimensionMismatchError(
            "cannot multiply %d-column by %d-row" % (a.ncols, b.nrows)
        )
    bt = tuple(zip(*b.rows))
    return RationalMatrix(
        [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a.rows]
    )


def hadamard(v, w) -> tuple:
    """Componentwise product of two vectors."""
    v = tuple(Fraction(x) for x in v)
    w = tuple(Fraction(x) for x in w)
    if len(v) != len(w):
        raise DimensionMismatchError(
            "vectors of length %d and %d" % (len(v), len(w))
        )
    return tuple(a * b for a, b in zip(v, w))


def _exact_div(a: int, b: int) -> int:
    # Bareiss guarantees divisibility; a failure here means a real bug.
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division %d / %d in elimination" % (a, b))
    return q


def _scaled_int_rows(m: RationalMatrix):
    """Clear denominators row by row; returns (int rows, row scale factors)."""
    scaled = []
    scales = []
    for row in m.rows:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scales.append(d)
        scaled.append([int(x * d) for x in row])
    return scaled, scales


def mat_det(m: RationalMatrix) -> Fraction:
    """Determinant by integer Bareiss elimination after row scaling."""
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatchError("determinant of a %d x %d matrix" % (n, m.ncols))
    if n == 0:
        return Fraction(1)
    a, scales = _scaled_int_rows(m)
    sign = 1
    prev = 1
    for col in range(n - 1):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        pivot_row = a[col]
        for i in range(col + 1, n):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, n):
                ai[j] = _exact_div(p * ai[j] - f * pivot_row[j], prev)
            ai[col] = 0
        prev = p
    det = sign * a[n - 1][n - 1]
    scale = 1
    for d in scales:
        scale *= d
    return Fraction(det, scale)


def mat_invert(m: RationalMatrix) -> RationalMatrix:
    """Exact inverse via fraction-free Bareiss elimination.

    Rows are scaled to integers, forward elimination is fraction-free
    (every division is exact by the Bareiss minor identity), and a single
    back-substitution pass over rationals produces the inverse.
    """
    n = m.nrows
    if n != m.ncols:
        raise DimensionMismatchError("cannot invert a %d x %d matrix" % (n, m.ncols))
    if n == 0:
        return RationalMatrix(())
    left, scales = _scaled_int_rows(m)
    # augment with the row scaling so the result is the inverse of m itself
    a = [left[i] + [scales[i] if j == i else 0 for j in range(n)] for i in range(n)]
    width = 2 * n
    prev = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("no pivot in column %d" % col)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        pivot_row = a[col]
        for i in range(col + 1, n):
            ai = a[i]
            f = ai[col]
            for j in range(col + 1, width):
                ai[j] = _exact_div(p * ai[j] - f * pivot_row[j], prev)
            ai[col] = 0
        prev = p
    inv = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        col = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            s = Fraction(a[i][n + j])
            for t in range(i + 1, n):
                s -= a[i][t] * col[t]
            col[i] = s / a[i][i]
        for i in range(n):
            inv[i][j] = col[i]
    return RationalMatrix(inv)
