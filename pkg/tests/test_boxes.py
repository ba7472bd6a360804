from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lrhadamard import (
    Box,
    conjugate,
    enumerate_box_partitions,
    fits_in_box,
    format_partition,
    normalize_partition,
    parse_partition,
    rho,
    shuffle_points,
)

partitions = st.lists(
    st.integers(min_value=1, max_value=9), max_size=5
).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_normalize_drops_trailing_zeros():
    assert normalize_partition((3, 1, 0, 0)) == (3, 1)
    assert normalize_partition([]) == ()
    assert normalize_partition((0,)) == ()


def test_normalize_rejects_bad_input():
    with pytest.raises(ValueError):
        normalize_partition((1, 2))
    with pytest.raises(ValueError):
        normalize_partition((2, -1))
    with pytest.raises(ValueError):
        normalize_partition((2, -1, 0))
    with pytest.raises(ValueError):
        normalize_partition((2, 0, 1))


@pytest.mark.parametrize(
    "text,parts",
    [
        ("2,1", (2, 1)),
        ("0", ()),
        ("", ()),
        ("5", (5,)),
        (" 3 , 3 , 1 ", (3, 3, 1)),
        ("3,1,0", (3, 1)),
    ],
)
def test_parse_partition(text, parts):
    assert parse_partition(text) == parts


def test_parse_partition_rejects_garbage():
    for bad in ("x", "1,,2", "1,2", "-1", "1.5"):
        with pytest.raises(ValueError):
            parse_partition(bad)


@given(partitions)
def test_parse_format_roundtrip(p):
    assert parse_partition(format_partition(p)) == p


def test_format_empty():
    assert format_partition(()) == "0"


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((4,)) == (1, 1, 1, 1)


@given(partitions)
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert sum(conjugate(p)) == sum(p)


def test_box_basics():
    b = Box(2, 3)
    assert (b.k, b.c, b.n) == (2, 3, 5)
    assert b.dimension == comb(5, 2) == 10
    with pytest.raises(ValueError):
        Box(-1, 2)


def test_fits_in_box():
    b = Box(2, 2)
    assert fits_in_box((), b)
    assert fits_in_box((2, 2), b)
    assert not fits_in_box((3,), b)
    assert not fits_in_box((1, 1, 1), b)


def test_rho_values():
    assert rho(4) == (Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2))
    assert rho(5) == (2, 1, 0, -1, -2)
    assert sum(rho(7)) == 0


def test_enumeration_order_2x2():
    assert list(enumerate_box_partitions(Box(2, 2))) == [
        (),
        (1,),
        (2,),
        (1, 1),
        (2, 1),
        (2, 2),
    ]


def test_enumeration_order_2x3():
    assert list(enumerate_box_partitions(Box(2, 3))) == [
        (),
        (1,),
        (2,),
        (1, 1),
        (3,),
        (2, 1),
        (3, 1),
        (2, 2),
        (3, 2),
        (3, 3),
    ]


@pytest.mark.parametrize("k,c", [(0, 0), (1, 1), (1, 4), (3, 2), (3, 3), (2, 5)])
def test_enumeration_counts_and_order(k, c):
    box = Box(k, c)
    parts = enumerate_box_partitions(box)
    assert len(parts) == box.dimension
    assert len(set(parts)) == len(parts)
    assert all(fits_in_box(p, box) for p in parts)
    keys = [(sum(p), tuple(-x for x in p)) for p in parts]
    assert keys == sorted(keys)


def test_shuffle_points_2x2_pinned_order():
    pts = shuffle_points(Box(2, 2))
    want = [
        (Fraction(3, 2), Fraction(1, 2)),
        (Fraction(3, 2), Fraction(-1, 2)),
        (Fraction(3, 2), Fraction(-3, 2)),
        (Fraction(1, 2), Fraction(-1, 2)),
        (Fraction(1, 2), Fraction(-3, 2)),
        (Fraction(-1, 2), Fraction(-3, 2)),
    ]
    assert [p.prefix for p in pts] == want
    # complementary entries fill the tail in descending order
    assert pts[0].full == (Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2))
    assert pts[3].full == (Fraction(1, 2), Fraction(-1, 2), Fraction(3, 2), Fraction(-3, 2))


@pytest.mark.parametrize("k,c", [(1, 1), (2, 2), (2, 3), (3, 2)])
def test_shuffle_points_structure(k, c):
    box = Box(k, c)
    pts = shuffle_points(box)
    assert len(pts) == box.dimension
    staircase = rho(box.n)
    prefixes = [p.prefix for p in pts]
    assert prefixes == sorted(prefixes, reverse=True)
    for i, p in enumerate(pts):
        assert p.index == i
        assert len(p.prefix) == k
        assert p.full[:k] == p.prefix
        assert sorted(p.full, reverse=True) == list(staircase)
        assert sorted(p.full[k:], reverse=True) == list(p.full[k:])
