"""Sundaram's correspondence between matchings and oscillating tableaux.

Reading a matching left to right, the smaller letter of each block
row-inserts its partner and the larger letter deletes itself (it is then
the minimum of the working tableau) with a hole slide.  The recorded
shape walk starts and ends at the empty partition and moves by one box
per step; it determines the matching uniquely.

Conjugating every shape of the walk is an involution on matchings.  Under
it the descent number reflects about n + 1 and the major index about n^2,
which is checked here through a six-way classification of each position
by the local shape pattern.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import NamedTuple

from .matchings import Matching, from_pairs
from .tableaux import (
    Box,
    Partition,
    Tableau,
    added_box,
    conjugate_partition,
    delete_min_and_slide,
    parse_partition,
    removed_box,
    reverse_row_insert,
    reverse_slide_and_place_min,
    row_insert,
)

__all__ = [
    "OscillatingTableau",
    "BijectionTrace",
    "TraceStep",
    "PositionCase",
    "DESCENT_CASES",
    "matching_to_oscillating",
    "oscillating_to_matching",
    "conjugate_oscillating",
    "conjugate_matching",
    "classify_position",
    "parse_oscillating",
]


@dataclass(frozen=True)
class OscillatingTableau:
    """A walk of 2n+1 partitions: empty endpoints, one-box steps."""

    shapes: tuple[Partition, ...]

    def __post_init__(self) -> None:
        shapes = self.shapes
        if len(shapes) < 3 or len(shapes) % 2 == 0:
            raise ValueError("a walk of length 2n needs 2n+1 shapes, n >= 1")
        if shapes[0].parts or shapes[-1].parts:
            raise ValueError("the walk must start and end at the empty shape")
        for idx in range(1, len(shapes)):
            a, b = shapes[idx - 1], shapes[idx]
            if b.size == a.size + 1:
                added_box(a, b)
            elif b.size == a.size - 1:
                removed_box(a, b)
            else:
                raise ValueError(
                    f"shapes {idx - 1} and {idx} do not differ by one box"
                )

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    @property
    def length(self) -> int:
        return len(self.shapes) - 1

    def __str__(self) -> str:
        return ";".join(str(p) for p in self.shapes)


def parse_oscillating(text: str) -> OscillatingTableau:
    """Parse the semicolon format "();(1);(1,1);(1);();(1);()"."""
    return OscillatingTableau(
        tuple(parse_partition(tok) for tok in text.split(";"))
    )


class TraceStep(NamedTuple):
    """The box touched at one step and whether it was added or removed."""

    box: Box
    insertion: bool


@dataclass(frozen=True)
class BijectionTrace:
    """The working tableaux P_0..P_{2n} alongside the per-step boxes."""

    tableaux: tuple[Tableau, ...]
    steps: tuple[TraceStep, ...]

    def __post_init__(self) -> None:
        if len(self.tableaux) != len(self.steps) + 1:
            raise ValueError("need one tableau more than steps")


def matching_to_oscillating(m: Matching) -> tuple[OscillatingTableau, BijectionTrace]:
    """Map a matching to its shape walk, keeping the full trace."""
    tab = Tableau()
    tableaux = [tab]
    steps = []
    shapes = [Partition()]
    for i in range(1, m.size + 1):
        j = m.partner_of(i)
        if i < j:
            tab, route = row_insert(tab, j)
            steps.append(TraceStep(route.new_box, True))
        else:
            if not tab.rows or tab.rows[0][0] != i:
                raise RuntimeError(
                    f"defect: {i} is not the minimum of the working tableau"
                )
            tab, vacated = delete_min_and_slide(tab)
            steps.append(TraceStep(vacated, False))
        tableaux.append(tab)
        shapes.append(tab.shape)
    osc = OscillatingTableau(tuple(shapes))
    return osc, BijectionTrace(tuple(tableaux), tuple(steps))


def oscillating_to_matching(t: OscillatingTableau) -> Matching:
    """Invert the shape walk back to its matching.

    Steps are processed from 2n down to 1: an added box is undone by a
    reverse insertion (the ejected value is the partner of the step
    index), a removed box by a reverse slide that puts the step index
    back at (1,1).
    """
    shapes = t.shapes
    pairs = []
    tab = Tableau()
    for i in range(t.length, 0, -1):
        before, after = shapes[i - 1], shapes[i]
        if after.size > before.size:
            tab, ejected = reverse_row_insert(tab, added_box(before, after))
            pairs.append((i, ejected))
        else:
            tab = reverse_slide_and_place_min(tab, removed_box(before, after), i)
    if tab.rows:
        raise RuntimeError("defect: walk inversion left a nonempty tableau")
    return from_pairs(pairs)


def conjugate_oscillating(t: OscillatingTableau) -> OscillatingTableau:
    """Conjugate every shape of the walk; involutive."""
    return OscillatingTableau(tuple(conjugate_partition(p) for p in t.shapes))


def conjugate_matching(m: Matching) -> Matching:
    """The involution induced by conjugating the shape walk."""
    osc, _ = matching_to_oscillating(m)
    return oscillating_to_matching(conjugate_oscillating(osc))


class PositionCase(IntEnum):
    """Local pattern of the walk around one position.

    LOWER/HIGHER compare rows of the two touched boxes: for double rises,
    where the second box sits relative to the first; for double falls,
    where the first box sits relative to the second.  Lower means a
    strictly larger row index.
    """

    PEAK = 1
    VALLEY = 2
    DOUBLE_RISE_LOWER = 3
    DOUBLE_RISE_HIGHER = 4
    DOUBLE_FALL_LOWER = 5
    DOUBLE_FALL_HIGHER = 6


#: Cases whose positions are exactly the descents of the matching.
DESCENT_CASES = frozenset(
    {PositionCase.PEAK, PositionCase.DOUBLE_RISE_LOWER, PositionCase.DOUBLE_FALL_LOWER}
)


def classify_position(t: OscillatingTableau, i: int) -> PositionCase:
    """Classify position i in 1..2n-1 from three consecutive shapes.

    The added/removed boxes are read off the shape differences, so the
    classification needs no tableau trace.
    """
    if not 1 <= i <= t.length - 1:
        raise ValueError(f"position {i} out of range 1..{t.length - 1}")
    a, b, c = t.shapes[i - 1], t.shapes[i], t.shapes[i + 1]
    rise1 = b.size > a.size
    rise2 = c.size > b.size
    if rise1 and not rise2:
        return PositionCase.PEAK
    if not rise1 and rise2:
        return PositionCase.VALLEY
    if rise1 and rise2:
        first, second = added_box(a, b), added_box(b, c)
        if second.row > first.row:
            return PositionCase.DOUBLE_RISE_LOWER
        return PositionCase.DOUBLE_RISE_HIGHER
    first, second = removed_box(a, b), removed_box(b, c)
    if first.row > second.row:
        return PositionCase.DOUBLE_FALL_LOWER
    return PositionCase.DOUBLE_FALL_HIGHER
