from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lrhadamard import (
    RepeatedCoordinatesError,
    TooLargeError,
    schur_bialternant,
    schur_jacobi_trudi,
    schur_tableaux_sum,
)

small_partitions = st.lists(
    st.integers(min_value=1, max_value=4), max_size=3
).map(lambda xs: tuple(sorted(xs, reverse=True)))

points = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=4),
    min_size=1,
    max_size=4,
    unique=True,
)


def test_empty_partition_evaluates_to_one():
    pt = (Fraction(3, 2), Fraction(1, 2))
    assert schur_bialternant((), pt) == 1
    assert schur_jacobi_trudi((), pt) == 1
    assert schur_tableaux_sum((), pt) == 1


def test_single_row_is_complete_homogeneous():
    pt = (Fraction(1, 2), Fraction(1, 3))
    # h_2 = x^2 + xy + y^2
    assert schur_bialternant((2,), pt) == Fraction(19, 36)
    assert schur_jacobi_trudi((2,), pt) == Fraction(19, 36)
    assert schur_tableaux_sum((2,), pt) == Fraction(19, 36)


def test_single_column_is_elementary():
    pt = (Fraction(2), Fraction(-1), Fraction(1, 2))
    assert schur_bialternant((1, 1, 1), pt) == Fraction(-1)
    assert schur_tableaux_sum((1, 1), pt) == 2 * -1 + 2 * Fraction(1, 2) + -1 * Fraction(1, 2)


def test_too_many_rows_gives_zero():
    pt = (Fraction(1), Fraction(2))
    assert schur_bialternant((1, 1, 1), pt) == 0
    assert schur_jacobi_trudi((1, 1, 1), pt) == 0
    assert schur_tableaux_sum((1, 1, 1), pt) == 0


def test_repeated_coordinates_rejected():
    with pytest.raises(RepeatedCoordinatesError):
        schur_bialternant((1,), (Fraction(1), Fraction(1)))


def test_tableaux_size_guard():
    with pytest.raises(TooLargeError):
        schur_tableaux_sum((21,), (Fraction(1),))
    with pytest.raises(TooLargeError):
        schur_tableaux_sum((7, 7, 7), (1, 2, 3))


def test_tableaux_count_via_all_ones():
    # entries 1..3, shape (2,1): 8 semistandard tableaux
    assert schur_tableaux_sum((2, 1), (1, 1, 1)) == 8
    assert schur_jacobi_trudi((2, 1), (1, 1, 1)) == 8


def test_known_factorization():
    # s_(2,1)(x,y) = xy (x + y)
    x, y = Fraction(5, 3), Fraction(-7, 2)
    assert schur_bialternant((2, 1), (x, y)) == x * y * (x + y)


@given(small_partitions, points)
@settings(max_examples=150, deadline=None)
def test_three_routes_agree(lam, pt):
    assume(len(set(pt)) == len(pt))
    jt = schur_jacobi_trudi(lam, pt)
    assert schur_bialternant(lam, pt) == jt
    assert schur_tableaux_sum(lam, pt) == jt


@given(points)
@settings(max_examples=60, deadline=None)
def test_first_row_sums_coordinates(pt):
    assert schur_jacobi_trudi((1,), pt) == sum(pt)
    assert schur_bialternant((1,), pt) == sum(pt)
