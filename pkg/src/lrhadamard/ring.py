"""The evaluation-basis ring: M, its inverse, Clifford and cup products.

A context for a box holds the change-of-basis matrix M (rows indexed by
partitions, columns by shuffle points, entry = Schur value at the point
prefix) and its exact inverse. Multiplying two basis elements is then a
Hadamard product of their M-rows pulled back through the inverse; the
cup product keeps only the top-degree part of that expansion.
"""

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

from .boxes import (
    Box,
    enumerate_box_partitions,
    normalize_partition,
    shuffle_points,
)
from .exact import RationalMatrix, mat_invert

__all__ = [
    "DEFAULT_DIMENSION_CAP",
    "PartitionOutOfBoxError",
    "ResourceLimitError",
    "ProductExpansion",
    "RingContext",
    "build_context",
    "ev_rho",
    "clifford_product",
    "cup_product",
    "full_lr_box",
    "minimal_box",
]

# C(14,7) = 3432, so the default still admits the 7x7 box.
DEFAULT_DIMENSION_CAP = 3500


class PartitionOutOfBoxError(ValueError):
    """A partition argument does not fit the context's box."""


class ResourceLimitError(RuntimeError):
    """The requested box is larger than the configured cap."""


@dataclass(frozen=True)
class ProductExpansion:
    """A product written in the Schur basis: partition -> coefficient.

    Zero coefficients are never stored. degrees records the sizes of the
    two factors, so top_degree tells which terms survive the filtration.
    """

    coefficients: dict
    degrees: tuple

    @property
    def top_degree(self) -> int:
        return self.degrees[0] + self.degrees[1]

    def top_part(self) -> dict:
        return {nu: c for nu, c in self.coefficients.items()
                if sum(nu) == self.top_degree}

    def lower_part(self) -> dict:
        return {nu: c for nu, c in self.coefficients.items()
                if sum(nu) != self.top_degree}


@dataclass(frozen=True, eq=False)
class RingContext:
    """Everything needed to multiply in one box; immutable once built."""

    box: Box
    partitions: tuple
    points: tuple
    M: RationalMatrix
    M_inv: RationalMatrix
    _index: dict = field(init=False, repr=False)
    _inv_cols: tuple = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {p: i for i, p in enumerate(self.partitions)}
        )
        # Integer form of M_inv columns (numerators over one denominator
        # per column) so products reduce to integer dot products.
        n = len(self.partitions)
        cols = []
        for i in range(n):
            col = [self.M_inv[j][i] for j in range(n)]
            den = lcm(*(x.denominator for x in col))
            cols.append((den, tuple(int(x * den) for x in col)))
        object.__setattr__(self, "_inv_cols", tuple(cols))

    def index_of(self, lam) -> int:
        lam = normalize_partition(lam)
        try:
            return self._index[lam]
        except KeyError:
            raise PartitionOutOfBoxError(
                "%s does not fit a %d x %d box" % (lam or "()", self.box.k, self.box.c)
            ) from None


def _int_minor(rows, cols) -> int:
    """Bareiss determinant of the integer submatrix rows x cols."""
    k = len(cols)
    if k == 0:
        return 1
    a = [[row[c] for c in cols] for row in rows]
    sign = 1
    prev = 1
    for t in range(k - 1):
        if a[t][t] == 0:
            swap = next((r for r in range(t + 1, k) if a[r][t] != 0), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        p = a[t][t]
        pivot_row = a[t]
        for i in range(t + 1, k):
            ai = a[i]
            f = ai[t]
            for j in range(t + 1, k):
                ai[j] = (p * ai[j] - f * pivot_row[j]) // prev
            ai[t] = 0
        prev = p
    return sign * a[k - 1][k - 1]


def build_context(box: Box, cap: int = DEFAULT_DIMENSION_CAP) -> RingContext:
    """Build M and M_inv for the box, exactly and deterministically.

    Every entry of M is a ratio of k x k minors of the n x n ground
    matrix B[i][e] = (2 rho_i)^e (the bialternant with shared power
    tables), and M_inv comes from the matching minors of the exact
    inverse of the rho power matrix: the compound of an inverse is the
    inverse of the compound. Only the small n x n matrix is ever
    eliminated, which is what makes big boxes affordable.
    """
    dim = box.dimension
    if dim > cap:
        raise ResourceLimitError(
            "box %d x %d needs dimension %d, above the cap %d"
            % (box.k, box.c, dim, cap)
        )
    partitions = enumerate_box_partitions(box)
    points = shuffle_points(box)
    n, k = box.n, box.k
    if n == 0:
        one = RationalMatrix([[1]])
        return RingContext(box=box, partitions=partitions, points=points,
                           M=one, M_inv=one)

    doubled = [n - 1 - 2 * i for i in range(n)]  # 2*rho, always integral
    powers = [[b ** e for e in range(n)] for b in doubled]
    base_exps = tuple(range(k))
    exps = []
    for lam in partitions:
        padded = list(lam) + [0] * (k - len(lam))
        exps.append(tuple(sorted(padded[j] + (k - 1 - j) for j in range(k))))

    subsets = list(combinations(range(n), k))
    m_rows = [[None] * dim for _ in range(dim)]
    base_minors = []
    for j, chosen in enumerate(subsets):
        rows = [powers[i] for i in chosen]
        v = _int_minor(rows, base_exps)
        base_minors.append(v)
        for i, e in enumerate(exps):
            # the doubling of rho scales a degree-d minor ratio by 2^d
            m_rows[i][j] = Fraction(_int_minor(rows, e), v << (sum(e) - sum(base_exps)))

    ground = RationalMatrix([[Fraction(b, 2) ** e for e in range(n)] for b in doubled])
    ground_inv = mat_invert(ground)
    scale = lcm(*(x.denominator for row in ground_inv for x in row))
    y = [[int(x * scale) for x in row] for row in ground_inv]
    scale_k = scale ** k
    shift = 1 << (k * (k - 1) // 2)
    inv_rows = [[None] * dim for _ in range(dim)]
    for j, chosen in enumerate(subsets):
        v = Fraction(base_minors[j], shift)
        for i, e in enumerate(exps):
            minor = _int_minor([y[t] for t in e], chosen)
            inv_rows[j][i] = v * Fraction(minor, scale_k)

    return RingContext(
        box=box,
        partitions=partitions,
        points=points,
        M=RationalMatrix(m_rows),
        M_inv=RationalMatrix(inv_rows),
    )


def ev_rho(ctx: RingContext, coeffs: dict) -> tuple:
    """Evaluate sum(coeffs[lam] * s_lam) at every shuffle point."""
    pairs = [(ctx.index_of(lam), Fraction(c)) for lam, c in coeffs.items()]
    dim = len(ctx.partitions)
    out = []
    for j in range(dim):
        out.append(sum((c * ctx.M[i][j] for i, c in pairs), Fraction(0)))
    return tuple(out)


def _solve_back(ctx: RingContext, values, indices):
    """Coefficients (at the given output indices) of the polynomial whose
    shuffle-point values are given: apply the transposed inverse."""
    den = lcm(*(x.denominator for x in values))
    nums = [int(x * den) for x in values]
    out = {}
    for i in indices:
        col_den, col_nums = ctx._inv_cols[i]
        s = sum(map(operator.mul, col_nums, nums))
        if s:
            out[ctx.partitions[i]] = Fraction(s, col_den * den)
    return out


def clifford_product(ctx: RingContext, lam, mu) -> ProductExpansion:
    """Full product in the deformed multiplication, lower-order terms kept."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    i, j = ctx.index_of(lam), ctx.index_of(mu)
    values = tuple(a * b for a, b in zip(ctx.M[i], ctx.M[j]))
    coeffs = _solve_back(ctx, values, range(len(ctx.partitions)))
    return ProductExpansion(coefficients=coeffs, degrees=(sum(lam), sum(mu)))


def cup_product(ctx: RingContext, lam, mu) -> ProductExpansion:
    """Cohomology product: only terms of degree |lam| + |mu| survive."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    i, j = ctx.index_of(lam), ctx.index_of(mu)
    top = sum(lam) + sum(mu)
    wanted = [t for t, p in enumerate(ctx.partitions) if sum(p) == top]
    values = tuple(a * b for a, b in zip(ctx.M[i], ctx.M[j]))
    coeffs = _solve_back(ctx, values, wanted)
    return ProductExpansion(coefficients=coeffs, degrees=(sum(lam), sum(mu)))


def full_lr_box(lam, mu) -> Box:
    """A box guaranteed to hold every shape of the full expansion."""
    side = sum(normalize_partition(lam)) + sum(normalize_partition(mu))
    return Box(side, side)


def minimal_box(lam, mu, nu) -> Box:
    """Smallest box containing all three partitions."""
    shapes = [normalize_partition(p) for p in (lam, mu, nu)]
    rows = max(len(p) for p in shapes)
    cols = max((p[0] if p else 0) for p in shapes)
    return Box(rows, cols)
