"""Partitions in a k x c box, their canonical order, rho, and shuffle points."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

__all__ = [
    "Partition",
    "Box",
    "ShufflePoint",
    "normalize_partition",
    "parse_partition",
    "format_partition",
    "conjugate",
    "fits_in_box",
    "rho",
    "enumerate_box_partitions",
    "shuffle_points",
]

# A partition is a plain tuple of weakly decreasing positive ints,
# trailing zeros dropped. The empty partition is ().
Partition = tuple


def normalize_partition(parts) -> Partition:
    """Validate weak decrease and nonnegativity, drop trailing zeros."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError("parts not weakly decreasing: %s" % (p,))
    while p and p[-1] == 0:
        p = p[:-1]
    if p and p[-1] < 0:
        raise ValueError("negative part in %s" % (p,))
    return p


def parse_partition(text: str) -> Partition:
    """Parse "2,1" style part lists; "0", "" and "()" all mean the empty partition."""
    s = text.strip()
    if s in ("", "0", "()"):
        return ()
    try:
        parts = [int(piece) for piece in s.split(",")]
    except ValueError:
        raise ValueError("cannot parse partition %r" % text) from None
    return normalize_partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(x) for x in p) if p else "0"


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


@dataclass(frozen=True)
class Box:
    """A k-row, c-column bounding box; partitions inside index the Schur basis."""

    k: int
    c: int

    def __post_init__(self):
        if self.k < 0 or self.c < 0:
            raise ValueError("box sides must be nonnegative: %r" % (self,))

    @property
    def n(self) -> int:
        return self.k + self.c

    @property
    def dimension(self) -> int:
        """Number of partitions in the box, C(n, k)."""
        return comb(self.n, self.k)


def fits_in_box(p, box: Box) -> bool:
    """True iff p has at most box.k parts, each at most box.c."""
    p = tuple(p)
    return len(p) <= box.k and (not p or p[0] <= box.c)


def rho(n: int):
    """((n-1)/2, (n-3)/2, ..., -(n-1)/2): entry i is (n+1)/2 - i for i = 1..n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Fraction(n + 1, 2) - i for i in range(1, n + 1))


def enumerate_box_partitions(box: Box):
    """All partitions in the box, ascending by size then lex-descending.

    The order is fixed so matrices built on it are reproducible: within a
    size class, (3,1) precedes (2,2).
    """
    found = []

    def grow(prefix, bound):
        found.append(tuple(prefix))
        if len(prefix) < box.k:
            for part in range(1, bound + 1):
                prefix.append(part)
                grow(prefix, part)
                prefix.pop()

    grow([], box.c)
    found.sort(key=lambda p: (sum(p), tuple(-x for x in p)))
    assert len(found) == box.dimension
    return tuple(found)


@dataclass(frozen=True)
class ShufflePoint:
    """One evaluation point: a k-shuffle of rho's entries.

    full is the whole permuted n-vector; prefix (the first k entries) is
    where Schur polynomials get evaluated; index is the position in the
    canonical ordering.
    """

    full: tuple
    prefix: tuple
    index: int


def shuffle_points(box: Box):
    """Evaluation points in canonical order: prefixes lex-descending.

    Choosing k of rho's strictly decreasing entries for the prefix and
    leaving the rest, in order, as the suffix enumerates exactly the
    k-shuffles; picking index subsets in ascending lexicographic order
    makes the prefixes descend.
    """
    full_rho = rho(box.n)
    points = []
    for idx, chosen in enumerate(combinations(range(box.n), box.k)):
        chosen_set = set(chosen)
        prefix = tuple(full_rho[i] for i in chosen)
        suffix = tuple(full_rho[i] for i in range(box.n) if i not in chosen_set)
        points.append(ShufflePoint(full=prefix + suffix, prefix=prefix, index=idx))
    return tuple(points)
