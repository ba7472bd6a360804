"""Schur polynomial evaluation at exact rational points, three ways.

The bialternant route is the production path. The Jacobi-Trudi and
tableau-sum routes recompute the same values by unrelated formulas and
exist to cross-check it.
"""

from fractions import Fraction

from .boxes import normalize_partition
from .exact import RationalMatrix, mat_det

__all__ = [
    "RepeatedCoordinatesError",
    "TooLargeError",
    "TABLEAUX_SIZE_LIMIT",
    "schur_bialternant",
    "schur_jacobi_trudi",
    "schur_tableaux_sum",
]

TABLEAUX_SIZE_LIMIT = 20


class RepeatedCoordinatesError(ValueError):
    """The bialternant ratio needs pairwise distinct coordinates."""


class TooLargeError(ValueError):
    """Tableau enumeration refused; the partition is too big."""


def schur_bialternant(lam, point) -> Fraction:
    """det(x_i^(lam_j + k - j)) / det(x_i^(k - j)) over the k point coordinates."""
    point = tuple(Fraction(x) for x in point)
    k = len(point)
    if len(set(point)) != k:
        raise RepeatedCoordinatesError("coordinates must be pairwise distinct: %s" % (point,))
    lam = normalize_partition(lam)
    if len(lam) > k:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    padded = lam + (0,) * (k - len(lam))
    num = mat_det(
        RationalMatrix([[x ** (padded[j] + k - 1 - j) for j in range(k)] for x in point])
    )
    den = mat_det(RationalMatrix([[x ** (k - 1 - j) for j in range(k)] for x in point]))
    return num / den


def _complete_homogeneous(point, top):
    """Evaluations of h_0 .. h_top, adding one variable at a time."""
    h = [Fraction(1)] + [Fraction(0)] * top
    for x in point:
        for m in range(1, top + 1):
            h[m] += x * h[m - 1]
    return h


def schur_jacobi_trudi(lam, point) -> Fraction:
    """Determinant of the h-matrix: det(h_(lam_i - i + j)) for i, j = 1..len(lam)."""
    point = tuple(Fraction(x) for x in point)
    lam = normalize_partition(lam)
    if not lam:
        return Fraction(1)
    rows = len(lam)
    h = _complete_homogeneous(point, lam[0] + rows - 1)

    def entry(i, j):
        d = lam[i] - i + j
        return h[d] if d >= 0 else Fraction(0)

    return mat_det(RationalMatrix([[entry(i, j) for j in range(rows)] for i in range(rows)]))


def schur_tableaux_sum(lam, point) -> Fraction:
    """Sum over semistandard tableaux of shape lam with entries in 1..k
    of the corresponding coordinate monomials."""
    lam = normalize_partition(lam)
    if sum(lam) > TABLEAUX_SIZE_LIMIT:
        raise TooLargeError("partition of size %d exceeds limit %d"
                            % (sum(lam), TABLEAUX_SIZE_LIMIT))
    point = tuple(Fraction(x) for x in point)
    k = len(point)
    if len(lam) > k:
        return Fraction(0)
    if not lam:
        return Fraction(1)
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    filling = {}
    total = Fraction(0)

    def fill(pos, running):
        nonlocal total
        if pos == len(cells):
            total += running
            return
        r, c = cells[pos]
        lo = filling[(r, c - 1)] if c > 0 else 0
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, k):
            filling[(r, c)] = v
            fill(pos + 1, running * point[v])
        filling.pop((r, c), None)

    fill(0, Fraction(1))
    return total
