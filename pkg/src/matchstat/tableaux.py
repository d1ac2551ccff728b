"""Young diagrams, tableaux, row insertion, and hole slides.

Row insertion bumps a value down the rows (each row receives the value
that displaced its leftmost strictly-larger entry) and records the
bumping route.  The slide operation removes the minimum at (1,1) and
moves the hole to an outside corner, at each step pulling in the smaller
of the right and below neighbours (the one below on ties).  Both
operations have exact inverses here; the reverse slide direction (the
larger of the upper and left neighbours moves in) is validated by
round-trip tests, which are the binding contract.

All values are immutable; every constructed ``Tableau`` re-checks its
row/column ordering invariants.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import NamedTuple

__all__ = [
    "Box",
    "Partition",
    "Tableau",
    "BumpingRoute",
    "conjugate_partition",
    "added_box",
    "removed_box",
    "row_insert",
    "reverse_row_insert",
    "delete_min_and_slide",
    "reverse_slide_and_place_min",
    "parse_partition",
]


class Box(NamedTuple):
    """1-indexed cell address; row 1 is the top row."""

    row: int
    col: int


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive row lengths; () is the empty shape."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for part in self.parts:
            if part < 1:
                raise ValueError(f"partition parts must be positive, got {part}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
            prev = part

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def parse_partition(text: str) -> Partition:
    """Parse "(2,1)" or "()" back into a Partition."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"malformed partition {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return Partition()
    try:
        parts = tuple(int(tok) for tok in inner.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return Partition(parts)


def conjugate_partition(p: Partition) -> Partition:
    """Transpose the diagram: column lengths become row lengths."""
    parts = p.parts
    if not parts:
        return Partition()
    out = tuple(
        sum(1 for part in parts if part >= c) for c in range(1, parts[0] + 1)
    )
    return Partition(out)


def added_box(before: Partition, after: Partition) -> Box:
    """The unique cell of ``after`` that is missing from ``before``."""
    b, a = before.parts, after.parts
    if len(a) == len(b) + 1:
        if a[-1] == 1 and a[:-1] == b:
            return Box(len(a), 1)
    elif len(a) == len(b):
        diff = [r for r in range(len(a)) if a[r] != b[r]]
        if len(diff) == 1 and a[diff[0]] == b[diff[0]] + 1:
            return Box(diff[0] + 1, a[diff[0]])
    raise ValueError(f"{after} does not extend {before} by one box")


def removed_box(before: Partition, after: Partition) -> Box:
    """The unique cell of ``before`` that is missing from ``after``."""
    return added_box(after, before)


@dataclass(frozen=True)
class Tableau:
    """Rows weakly increasing, columns strictly increasing, positive entries."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        prev_len = None
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError("tableau rows must be nonempty")
            if prev_len is not None and len(row) > prev_len:
                raise ValueError("row lengths must be weakly decreasing")
            prev_len = len(row)
            for c, x in enumerate(row):
                if x < 1:
                    raise ValueError(f"entries must be positive, got {x}")
                if c and row[c - 1] > x:
                    raise ValueError("rows must be weakly increasing")
                if r and self.rows[r - 1][c] >= x:
                    raise ValueError("columns must be strictly increasing")

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def __str__(self) -> str:
        """Debug rendering: one row per line, entries space-separated."""
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


@dataclass(frozen=True)
class BumpingRoute:
    """Boxes touched by a row insertion, one per row from row 1 down."""

    boxes: tuple[Box, ...]
    new_box: Box

    def __post_init__(self) -> None:
        if not self.boxes:
            raise ValueError("a bumping route touches at least one row")
        for k, box in enumerate(self.boxes):
            if box.row != k + 1:
                raise ValueError("route rows must be consecutive from row 1")
        if self.new_box != self.boxes[-1]:
            raise ValueError("new_box must be the last box of the route")


def _freeze(rows: list[list[int]]) -> Tableau:
    return Tableau(tuple(tuple(row) for row in rows))


def row_insert(t: Tableau, x: int) -> tuple[Tableau, BumpingRoute]:
    """Insert x by row bumping; the shape gains exactly one box.

    In each row the incoming value lands where the leftmost strictly
    larger entry sat (that entry moves on to the next row), or at the end
    of the row if nothing is larger, which closes the route.
    """
    if x < 1:
        raise ValueError(f"entries must be positive, got {x}")
    rows = [list(r) for r in t.rows]
    boxes = []
    value = x
    for r, row in enumerate(rows):
        pos = bisect_right(row, value)
        boxes.append(Box(r + 1, pos + 1))
        if pos == len(row):
            row.append(value)
            break
        row[pos], value = value, row[pos]
    else:
        rows.append([value])
        boxes.append(Box(len(rows), 1))
    route = BumpingRoute(tuple(boxes), boxes[-1])
    return _freeze(rows), route


def reverse_row_insert(t: Tableau, b: Box) -> tuple[Tableau, int]:
    """Undo the row insertion whose new box was ``b``.

    Returns the smaller tableau and the ejected value;
    ``row_insert(smaller, ejected)`` reproduces ``t`` with a route ending
    at ``b``.  ``b`` must be a removable corner.
    """
    rows = [list(r) for r in t.rows]
    r, c = b.row - 1, b.col - 1
    if (
        not 0 <= r < len(rows)
        or c != len(rows[r]) - 1
        or (r + 1 < len(rows) and len(rows[r + 1]) > c)
    ):
        raise ValueError(f"{tuple(b)} is not a removable corner of shape {t.shape}")
    value = rows[r].pop()
    if not rows[r]:
        del rows[r]
    for k in range(r - 1, -1, -1):
        row = rows[k]
        # the rightmost entry strictly smaller than the travelling value
        # is the one that bumped it; swap them back
        idx = bisect_left(row, value) - 1
        row[idx], value = value, row[idx]
    return _freeze(rows), value


def delete_min_and_slide(t: Tableau) -> tuple[Tableau, Box]:
    """Remove the minimum at (1,1) and slide the hole out.

    Returns the new tableau and the vacated outside corner; the shape
    loses exactly one box.
    """
    if not t.rows:
        raise ValueError("cannot delete from an empty tableau")
    rows = [list(r) for r in t.rows]
    r = c = 0
    while True:
        right = rows[r][c + 1] if c + 1 < len(rows[r]) else None
        below = rows[r + 1][c] if r + 1 < len(rows) and c < len(rows[r + 1]) else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r][c] = right
            c += 1
        else:
            rows[r][c] = below
            r += 1
    rows[r].pop()
    if not rows[r]:
        del rows[r]
    return _freeze(rows), Box(r + 1, c + 1)


def reverse_slide_and_place_min(t: Tableau, corner: Box, v: int) -> Tableau:
    """Undo delete_min_and_slide for the given vacated corner and minimum.

    A hole opens at ``corner`` (which must be addable to the shape) and
    slides back to (1,1), the larger of the upper and left neighbours
    moving in at each step; ``v`` is then written at (1,1).  Requires
    ``v`` strictly smaller than every entry of ``t``.
    """
    if v < 1:
        raise ValueError(f"entries must be positive, got {v}")
    if t.rows and t.rows[0][0] <= v:
        raise ValueError(f"{v} is not strictly smaller than every entry")
    rows = [list(r) for r in t.rows]
    r, c = corner.row - 1, corner.col - 1
    if r == len(rows) and c == 0:
        rows.append([0])
    elif 0 <= r < len(rows) and c == len(rows[r]) and (r == 0 or len(rows[r - 1]) > c):
        rows[r].append(0)
    else:
        raise ValueError(
            f"{tuple(corner)} is not an addable corner of shape {t.shape}"
        )
    while (r, c) != (0, 0):
        above = rows[r - 1][c] if r > 0 else None
        left = rows[r][c - 1] if c > 0 else None
        if left is None or (above is not None and above >= left):
            rows[r][c] = above
            r -= 1
        else:
            rows[r][c] = left
            c -= 1
    rows[0][0] = v
    return _freeze(rows)
