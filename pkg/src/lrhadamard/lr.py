"""Classical Littlewood-Richardson coefficients by counting skew tableaux.

This module is the ground-truth oracle. It deliberately shares no code
with the evaluation pipeline: coefficients come straight from the rule
(fillings of nu/lam with content mu, rows weakly increasing, columns
strictly increasing, reverse reading word a lattice word).
"""

from functools import lru_cache

from .boxes import fits_in_box, normalize_partition

__all__ = ["lr_coefficient", "lr_expand", "truncate_to_box"]


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR tableaux of shape nu/lam and content mu."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    nu = normalize_partition(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    if len(lam) > len(nu):
        return 0
    inner = lam + (0,) * (len(nu) - len(lam))
    if any(a > b for a, b in zip(inner, nu)):
        return 0
    if not mu:
        return 1
    # Cells in reverse reading word order (rows top to bottom, right to
    # left inside a row), so the lattice condition is checkable as each
    # cell is placed: after every step, #1 >= #2 >= ... must hold.
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, inner[r] - 1, -1)]
    values = len(mu)
    counts = [0] * values
    filling = {}
    hits = 0

    def place(pos):
        nonlocal hits
        if pos == len(cells):
            hits += 1
            return
        r, c = cells[pos]
        for v in range(values):
            if counts[v] >= mu[v]:
                continue
            if v > 0 and counts[v] >= counts[v - 1]:
                continue
            right = filling.get((r, c + 1))
            if right is not None and v > right:
                continue
            # the cell above is absent from filling exactly when it lies
            # inside the inner shape, where no column constraint applies
            above = filling.get((r - 1, c))
            if above is not None and v <= above:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            place(pos + 1)
            counts[v] -= 1
        filling.pop((r, c), None)

    place(0)
    return hits


def _outer_shapes(lam, total, max_rows, max_first):
    """Weakly decreasing shapes nu containing lam with |nu| = total,
    at most max_rows rows and first part at most max_first."""
    row_low = [lam[i] if i < len(lam) else 0 for i in range(max_rows)]
    tail_min = [0] * (max_rows + 1)
    for i in range(max_rows - 1, -1, -1):
        tail_min[i] = tail_min[i + 1] + row_low[i]
    shapes = []
    current = [0] * max_rows

    def grow(i, remaining, prev):
        if remaining == 0 and i >= len(lam):
            shapes.append(tuple(current[:i]))
            return
        if i == max_rows or remaining == 0:
            return
        low = max(row_low[i], 1)
        high = min(prev, remaining - tail_min[i + 1])
        for v in range(high, low - 1, -1):
            current[i] = v
            grow(i + 1, remaining - v, v)

    grow(0, total, max_first)
    return shapes


def _factor_key(lam, mu):
    # symmetric rule; backtracking is cheaper with the smaller content
    return (lam, mu) if (sum(mu), mu) <= (sum(lam), lam) else (mu, lam)


@lru_cache(maxsize=None)
def _expand_cached(lam, mu):
    total = sum(lam) + sum(mu)
    max_rows = len(lam) + len(mu)
    max_first = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    found = []
    for nu in _outer_shapes(lam, total, max_rows, max_first):
        c = lr_coefficient(lam, mu, nu)
        if c:
            found.append((nu, c))
    found.sort(key=lambda item: (sum(item[0]), tuple(-x for x in item[0])))
    return tuple(found)


def lr_expand(lam, mu) -> dict:
    """All nu with nonzero coefficient, as a dict nu -> positive integer."""
    lam = normalize_partition(lam)
    mu = normalize_partition(mu)
    return dict(_expand_cached(*_factor_key(lam, mu)))


def truncate_to_box(expansion, box) -> dict:
    """Drop every shape that does not fit the box."""
    return {nu: c for nu, c in expansion.items() if fits_in_box(nu, box)}
