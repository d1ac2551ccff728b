"""Partitions, tableaux, insertion/slide operations and their inverses."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchstat import (
    Box,
    Partition,
    Tableau,
    conjugate_partition,
    delete_min_and_slide,
    parse_partition,
    reverse_row_insert,
    reverse_slide_and_place_min,
    row_insert,
)


def build_by_insertion(values):
    tab = Tableau()
    for v in values:
        tab, _ = row_insert(tab, v)
    return tab


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))

    def test_rendering(self):
        assert str(Partition()) == "()"
        assert str(Partition((2, 1))) == "(2,1)"

    def test_parse(self):
        assert parse_partition("(3,1,1)") == Partition((3, 1, 1))
        assert parse_partition("()") == Partition()
        with pytest.raises(ValueError):
            parse_partition("2,1")
        with pytest.raises(ValueError):
            parse_partition("(2,x)")


class TestConjugate:
    def test_empty(self):
        assert conjugate_partition(Partition()) == Partition()

    def test_column_becomes_row(self):
        assert conjugate_partition(Partition((1, 1))) == Partition((2,))

    def test_self_conjugate_hook(self):
        assert conjugate_partition(Partition((2, 1))) == Partition((2, 1))

    def test_involution_and_size(self):
        rng = random.Random(0)
        for _ in range(200):
            parts = sorted(
                (rng.randint(1, 12) for _ in range(rng.randint(0, 8))), reverse=True
            )
            p = Partition(tuple(parts))
            q = conjugate_partition(p)
            assert q.size == p.size
            assert conjugate_partition(q) == p


class TestTableauValidation:
    def test_row_order(self):
        with pytest.raises(ValueError):
            Tableau(((2, 1),))

    def test_column_strictness(self):
        with pytest.raises(ValueError):
            Tableau(((2, 3), (2,)))

    def test_row_lengths(self):
        with pytest.raises(ValueError):
            Tableau(((3,), (4, 5)))

    def test_rendering(self):
        assert str(Tableau(((3, 5), (4,)))) == "3 5\n4"


class TestRowInsert:
    def test_into_empty(self):
        tab, route = row_insert(Tableau(), 4)
        assert tab.rows == ((4,),)
        assert route.new_box == Box(1, 1)

    def test_bump_to_second_row(self):
        tab, route = row_insert(Tableau(((4,),)), 3)
        assert tab.rows == ((3,), (4,))
        assert route.boxes == (Box(1, 1), Box(2, 1))
        assert route.new_box == Box(2, 1)

    def test_append_to_first_row(self):
        tab, route = row_insert(Tableau(((3,), (4,))), 5)
        assert tab.rows == ((3, 5), (4,))
        assert route.new_box == Box(1, 2)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            row_insert(Tableau(), 0)

    @given(st.lists(st.integers(1, 60), max_size=40))
    def test_shape_grows_one_box_and_stays_valid(self, values):
        tab = Tableau()
        for v in values:
            new_tab, route = row_insert(tab, v)
            # the Tableau constructor re-validates the invariants
            assert new_tab.shape.size == tab.shape.size + 1
            grew = [
                r
                for r in range(len(new_tab.rows))
                if r >= len(tab.rows) or len(new_tab.rows[r]) != len(tab.rows[r])
            ]
            assert len(grew) == 1
            assert route.new_box.row == grew[0] + 1
            tab = new_tab


class TestReverseRowInsert:
    def test_undo_bump(self):
        tab, ejected = reverse_row_insert(Tableau(((3,), (4,))), Box(2, 1))
        assert tab.rows == ((4,),)
        assert ejected == 3

    def test_single_box(self):
        tab, ejected = reverse_row_insert(Tableau(((4,),)), Box(1, 1))
        assert tab.rows == ()
        assert ejected == 4

    def test_undo_append(self):
        tab, ejected = reverse_row_insert(Tableau(((3, 5), (4,))), Box(1, 2))
        assert tab.rows == ((3,), (4,))
        assert ejected == 5

    def test_rejects_non_corner(self):
        with pytest.raises(ValueError, match="removable corner"):
            reverse_row_insert(Tableau(((3, 5), (4,))), Box(1, 1))
        with pytest.raises(ValueError, match="removable corner"):
            reverse_row_insert(Tableau(((3, 5), (4,))), Box(3, 1))

    @given(st.lists(st.integers(1, 60), min_size=1, max_size=40))
    def test_round_trip(self, values):
        before = build_by_insertion(values[:-1])
        after, route = row_insert(before, values[-1])
        undone, ejected = reverse_row_insert(after, route.new_box)
        assert undone == before
        assert ejected == values[-1]


class TestSlides:
    def test_two_rows(self):
        tab, vacated = delete_min_and_slide(Tableau(((3,), (4,))))
        assert tab.rows == ((4,),)
        assert vacated == Box(2, 1)

    def test_single_box(self):
        tab, vacated = delete_min_and_slide(Tableau(((4,),)))
        assert tab.rows == ()
        assert vacated == Box(1, 1)

    def test_right_neighbour_wins(self):
        # golden value locked in after the round-trip oracle passed
        start = Tableau(((2, 5), (6,)))
        tab, vacated = delete_min_and_slide(start)
        assert reverse_slide_and_place_min(tab, vacated, 2) == start
        assert tab.rows == ((5,), (6,))
        assert vacated == Box(1, 2)

    def test_below_neighbour_wins(self):
        tab, vacated = delete_min_and_slide(Tableau(((2, 7), (5,))))
        assert tab.rows == ((5, 7),)
        assert vacated == Box(2, 1)

    def test_tie_prefers_below(self):
        tab, vacated = delete_min_and_slide(Tableau(((1, 4), (4,))))
        assert tab.rows == ((4, 4),)
        assert vacated == Box(2, 1)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            delete_min_and_slide(Tableau())


class TestReverseSlide:
    def test_reopen_second_row(self):
        assert reverse_slide_and_place_min(Tableau(((4,),)), Box(2, 1), 3).rows == (
            (3,),
            (4,),
        )

    def test_into_empty(self):
        assert reverse_slide_and_place_min(Tableau(), Box(1, 1), 4).rows == ((4,),)

    def test_reopen_first_row(self):
        assert reverse_slide_and_place_min(Tableau(((4,),)), Box(1, 2), 3).rows == (
            (3, 4),
        )

    def test_rejects_non_addable(self):
        with pytest.raises(ValueError, match="addable"):
            reverse_slide_and_place_min(Tableau(((4,),)), Box(1, 3), 1)
        with pytest.raises(ValueError, match="addable"):
            reverse_slide_and_place_min(Tableau(((4,),)), Box(3, 1), 1)

    def test_rejects_non_minimal(self):
        with pytest.raises(ValueError, match="strictly smaller"):
            reverse_slide_and_place_min(Tableau(((4,),)), Box(1, 2), 4)

    @given(st.sets(st.integers(1, 500), min_size=1, max_size=40))
    @settings(max_examples=150)
    def test_round_trip_with_distinct_entries(self, entries):
        tab = build_by_insertion(sorted(entries, key=lambda v: hash((v, 13))))
        smaller, vacated = delete_min_and_slide(tab)
        restored = reverse_slide_and_place_min(smaller, vacated, min(entries))
        assert restored == tab


def route_strictly_left(r1, r2):
    cols1 = {b.row: b.col for b in r1.boxes}
    cols2 = {b.row: b.col for b in r2.boxes}
    return all(cols1[row] < cols2[row] for row in cols1 if row in cols2)


def route_weakly_left(r1, r2):
    cols1 = {b.row: b.col for b in r1.boxes}
    cols2 = {b.row: b.col for b in r2.boxes}
    return all(cols1[row] <= cols2[row] for row in cols1 if row in cols2)


def check_double_insertion(tab, x, y):
    """Route/new-box relations for inserting x then y.

    x <= y: the first route stays strictly left of the second and the
    first new box is strictly left of and weakly below the second.
    x > y: the second route is weakly left of the first and the second
    new box is weakly left of and strictly below the first.
    """
    mid, route1 = row_insert(tab, x)
    _, route2 = row_insert(mid, y)
    b1, b2 = route1.new_box, route2.new_box
    if x <= y:
        assert route_strictly_left(route1, route2)
        assert b1.col < b2.col and b1.row >= b2.row
    else:
        assert route_weakly_left(route2, route1)
        assert b2.col <= b1.col and b2.row > b1.row


def test_double_insertion_relations_random():
    rng = random.Random(2024)
    for _ in range(500):
        base = build_by_insertion(
            [rng.randint(1, 50) for _ in range(rng.randint(0, 25))]
        )
        check_double_insertion(base, rng.randint(1, 50), rng.randint(1, 50))
