"""Frozen reference data for the 2x2 and 2x3 boxes.

Used by the test suite and by the verify command. Every table here was
cross-checked against the live pipeline and the tableau oracle before
being frozen; the two full product tables are exhaustive over nonempty
factor pairs.
"""

from fractions import Fraction as F

# ---- 2x2 box (dimension 6) -------------------------------------------------

BOX22_PREFIXES = (
    (F(3, 2), F(1, 2)),
    (F(3, 2), F(-1, 2)),
    (F(3, 2), F(-3, 2)),
    (F(1, 2), F(-1, 2)),
    (F(1, 2), F(-3, 2)),
    (F(-1, 2), F(-3, 2)),
)

BOX22_VECTORS = {
    (): (1, 1, 1, 1, 1, 1),
    (1,): (2, 1, 0, 0, -1, -2),
    (2,): (F(13, 4), F(7, 4), F(9, 4), F(1, 4), F(7, 4), F(13, 4)),
    (1, 1): (F(3, 4), F(-3, 4), F(-9, 4), F(-1, 4), F(-3, 4), F(3, 4)),
    (2, 1): (F(3, 2), F(-3, 4), 0, 0, F(3, 4), F(-3, 2)),
    (2, 2): (F(9, 16), F(9, 16), F(81, 16), F(1, 16), F(9, 16), F(9, 16)),
}

BOX22_PRODUCTS = {
    ((1,), (1,)): {(1, 1): F(1), (2,): F(1)},
    ((1,), (2,)): {(1,): F(5, 2), (2, 1): F(1)},
    ((1,), (1, 1)): {(2, 1): F(1)},
    ((1,), (2, 1)): {(): F(9, 16), (1, 1): F(5, 2), (2, 2): F(1)},
    ((1,), (2, 2)): {(1,): F(9, 16)},
    ((2,), (2,)): {(1, 1): F(5, 2), (2,): F(5, 2), (2, 2): F(1)},
    ((1, 1), (2,)): {(): F(9, 16), (1, 1): F(5, 2)},
    ((2,), (2, 1)): {(1,): F(9, 16), (2, 1): F(5, 2)},
    ((2,), (2, 2)): {(1, 1): F(9, 16), (2, 2): F(5, 2)},
    ((1, 1), (1, 1)): {(2, 2): F(1)},
    ((1, 1), (2, 1)): {(1,): F(9, 16)},
    ((1, 1), (2, 2)): {(2,): F(9, 16), (2, 2): F(-5, 2)},
    ((2, 1), (2, 1)): {(1, 1): F(9, 16), (2,): F(9, 16)},
    ((2, 1), (2, 2)): {(2, 1): F(9, 16)},
    ((2, 2), (2, 2)): {(): F(81, 256), (1, 1): F(45, 32),
                       (2,): F(-45, 32), (2, 2): F(25, 4)},
}

# ---- 2x3 box (dimension 10) ------------------------------------------------

BOX23_M = (
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (3, 2, 1, 0, 1, 0, -1, -1, -2, -3),
    (7, 4, 3, 4, 1, 1, 3, 1, 4, 7),
    (2, 0, -2, -4, 0, -1, -2, 0, 0, 2),
    (15, 8, 5, 0, 1, 0, -5, -1, -8, -15),
    (6, 0, -2, 0, 0, 0, 2, 0, 0, -6),
    (14, 0, -6, -16, 0, -1, -6, 0, 0, 14),
    (4, 0, 4, 16, 0, 1, 4, 0, 0, 4),
    (12, 0, 4, 0, 0, 0, -4, 0, 0, -12),
    (8, 0, -8, -64, 0, -1, -8, 0, 0, 8),
)

BOX23_M_INV = (
    (0, 0, 0, F(1, 36), 0, F(1, 24), F(1, 72), F(7, 144), F(1, 48), F(1, 144)),
    (F(-1, 6), F(-1, 12), F(1, 6), F(-5, 24), F(1, 12), 0, F(1, 24),
     F(-5, 24), F(-1, 12), F(-1, 24)),
    (0, 0, 0, F(1, 4), 0, F(-1, 8), F(-1, 8), F(3, 16), F(1, 16), F(1, 16)),
    (0, 0, 0, F(-1, 36), 0, 0, F(1, 36), F(-1, 36), 0, F(-1, 36)),
    (F(2, 3), F(2, 3), F(-1, 6), F(5, 6), F(-1, 6), 0, F(-1, 6),
     F(5, 24), F(1, 24), F(1, 24)),
    (0, 0, 0, F(-16, 9), 0, 0, F(4, 9), F(-4, 9), 0, F(-1, 9)),
    (0, 0, 0, F(1, 4), 0, F(1, 8), F(-1, 8), F(3, 16), F(-1, 16), F(1, 16)),
    (F(2, 3), F(-2, 3), F(-1, 6), F(5, 6), F(1, 6), 0, F(-1, 6),
     F(5, 24), F(-1, 24), F(1, 24)),
    (F(-1, 6), F(1, 12), F(1, 6), F(-5, 24), F(-1, 12), 0, F(1, 24),
     F(-5, 24), F(1, 12), F(-1, 24)),
    (0, 0, 0, F(1, 36), 0, F(-1, 24), F(1, 72), F(7, 144), F(-1, 48), F(1, 144)),
)

BOX23_PRODUCTS = {
    ((1,), (1,)): {(1, 1): 1, (2,): 1},
    ((1,), (2,)): {(2, 1): 1, (3,): 1},
    ((1,), (1, 1)): {(2, 1): 1},
    ((1,), (3,)): {(3, 1): 1, (): -4, (2,): 5},
    ((1,), (2, 1)): {(2, 2): 1, (3, 1): 1},
    ((1,), (3, 1)): {(3, 2): 1, (2, 1): 5},
    ((1,), (2, 2)): {(3, 2): 1},
    ((1,), (3, 2)): {(3, 3): 1, (1, 1): 4, (2, 2): 5},
    ((1,), (3, 3)): {(2, 1): 4},
    ((2,), (2,)): {(2, 2): 1, (3, 1): 1, (): -4, (2,): 5},
    ((1, 1), (2,)): {(3, 1): 1},
    ((2,), (3,)): {(3, 2): 1, (1,): -4, (2, 1): 5, (3,): 5},
    ((2,), (2, 1)): {(3, 2): 1, (2, 1): 5},
    ((2,), (3, 1)): {(3, 3): 1, (2, 2): 5, (3, 1): 5},
    ((2,), (2, 2)): {(1, 1): 4, (2, 2): 5},
    ((2,), (3, 2)): {(2, 1): 4, (3, 2): 5},
    ((2,), (3, 3)): {(2, 2): 4, (3, 3): 5},
    ((1, 1), (1, 1)): {(2, 2): 1},
    ((1, 1), (3,)): {(2, 1): 5},
    ((1, 1), (2, 1)): {(3, 2): 1},
    ((1, 1), (3, 1)): {(1, 1): 4, (2, 2): 5},
    ((1, 1), (2, 2)): {(3, 3): 1},
    ((1, 1), (3, 2)): {(2, 1): 4},
    ((1, 1), (3, 3)): {(3, 1): 4, (3, 3): -5},
    ((3,), (3,)): {(3, 3): 1, (): -20, (2,): 21, (2, 2): 5, (3, 1): 5},
    ((2, 1), (3,)): {(2, 2): 5, (3, 1): 5},
    ((3,), (3, 1)): {(2, 1): 25, (3, 2): 5},
    ((2, 2), (3,)): {(3, 2): 5},
    ((3,), (3, 2)): {(1, 1): 20, (2, 2): 25, (3, 3): 5},
    ((3,), (3, 3)): {(2, 1): 20},
    ((2, 1), (2, 1)): {(3, 3): 1, (1, 1): 4, (2, 2): 5},
    ((2, 1), (3, 1)): {(2, 1): 4, (3, 2): 5},
    ((2, 1), (2, 2)): {(2, 1): 4},
    ((2, 1), (3, 2)): {(2, 2): 4, (3, 1): 4},
    ((2, 1), (3, 3)): {(3, 2): 4},
    ((3, 1), (3, 1)): {(1, 1): 20, (2, 2): 25, (3, 1): 4},
    ((2, 2), (3, 1)): {(2, 2): 4, (3, 3): 5},
    ((3, 1), (3, 2)): {(2, 1): 20, (3, 2): 4},
    ((3, 1), (3, 3)): {(3, 1): 20, (3, 3): -21},
    ((2, 2), (2, 2)): {(3, 1): 4, (3, 3): -5},
    ((2, 2), (3, 2)): {(3, 2): 4},
    ((2, 2), (3, 3)): {(1, 1): 16, (2, 2): 20, (3, 1): -20, (3, 3): 25},
    ((3, 2), (3, 2)): {(1, 1): 16, (2, 2): 20, (3, 3): 4},
    ((3, 2), (3, 3)): {(2, 1): 16},
    ((3, 3), (3, 3)): {(1, 1): -80, (2, 2): -84, (3, 1): 100, (3, 3): -105},
}

# ---- frozen oracle expansions ----------------------------------------------

# s_{(2,1)} squared: seven shapes, one multiplicity 2. Confirmed by two
# independent routes (tableau counting, monomial polynomial product).
S21_SQUARED = {
    (4, 2): 1,
    (4, 1, 1): 1,
    (3, 3): 1,
    (3, 2, 1): 2,
    (3, 1, 1, 1): 1,
    (2, 2, 2): 1,
    (2, 2, 1, 1): 1,
}

# s_{(2,2)} squared, same two-route confirmation.
S22_SQUARED = {
    (4, 4): 1,
    (4, 3, 1): 1,
    (4, 2, 2): 1,
    (3, 3, 1, 1): 1,
    (3, 2, 2, 1): 1,
    (2, 2, 2, 2): 1,
}
