"""Matchings of {1, ..., 2n} and their descent statistics.

A matching (fixed-point-free involution) pairs up the letters 1..2n;
S_{2n} contains (2n-1)!! of them.  This module provides exact
enumeration, uniform sampling with reproducible (seed, stream)
addressing, and the descent/major-index moments both in closed form and
by exhaustive brute force.  All moments are exact `fractions.Fraction`
values; the brute-force report is the oracle for the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Iterator

import numpy as np

__all__ = [
    "Matching",
    "DescentStats",
    "MomentReport",
    "double_factorial",
    "from_pairs",
    "parse_matching",
    "descent_stats",
    "enumerate_matchings",
    "sample_uniform",
    "closed_form_moments",
    "brute_force_moments",
    "compare_reports",
]

_UINT64_MAX = 2**64 - 1


def double_factorial(m: int) -> int:
    """Product m * (m-2) * ... * 1 for odd m, with (-1)!! = 1.

    For m = 2n - 1 this counts the matchings of S_{2n}.
    """
    if m < -1 or m % 2 == 0:
        raise ValueError(f"double factorial needs an odd integer >= -1, got {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


@dataclass(frozen=True)
class Matching:
    """A fixed-point-free involution of {1..2n} in one-line notation.

    ``partner[i - 1]`` is the partner of letter i (1-indexed letters).
    """

    partner: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.partner
        size = len(p)
        if size == 0 or size % 2:
            raise ValueError("a matching needs a positive even number of letters")
        seen = [False] * (size + 1)
        for i, j in enumerate(p, start=1):
            if not 1 <= j <= size:
                raise ValueError(f"element {j} out of range 1..{size}")
            if j == i:
                raise ValueError(f"element {i} is a fixed point")
            if seen[j]:
                raise ValueError(f"element {j} repeated")
            seen[j] = True
        for i, j in enumerate(p, start=1):
            if p[j - 1] != i:
                raise ValueError(f"elements {i} and {j} do not pair up")

    @property
    def n(self) -> int:
        return len(self.partner) // 2

    @property
    def size(self) -> int:
        return len(self.partner)

    def partner_of(self, i: int) -> int:
        if not 1 <= i <= len(self.partner):
            raise ValueError(f"element {i} out of range 1..{len(self.partner)}")
        return self.partner[i - 1]

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The blocks {a, b} as (a, b) with a < b, sorted by a."""
        return tuple((i, j) for i, j in enumerate(self.partner, start=1) if i < j)

    def __str__(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.pairs())


def from_pairs(pairs: Iterable[tuple[int, int]]) -> Matching:
    """Build a matching from its blocks; the blocks must tile {1..2n}."""
    blocks = list(pairs)
    size = 2 * len(blocks)
    if size == 0:
        raise ValueError("at least one pair is required")
    partner = [0] * size
    seen = [False] * (size + 1)
    for a, b in blocks:
        if a == b:
            raise ValueError(f"element {a} paired with itself")
        for x in (a, b):
            if not 1 <= x <= size:
                raise ValueError(f"element {x} out of range 1..{size}")
            if seen[x]:
                raise ValueError(f"element {x} repeated")
            seen[x] = True
        partner[a - 1] = b
        partner[b - 1] = a
    return Matching(tuple(partner))


def parse_matching(text: str) -> Matching:
    """Parse the pair format "1-4,2-3,5-6" (pairs in any order).

    ``str(matching)`` emits the canonical form: a < b within each pair,
    pairs sorted by their smaller element.
    """
    pairs = []
    for token in text.split(","):
        token = token.strip()
        left, sep, right = token.partition("-")
        if not sep:
            raise ValueError(f"malformed pair {token!r}")
        try:
            a, b = int(left), int(right)
        except ValueError:
            raise ValueError(f"malformed pair {token!r}") from None
        pairs.append((min(a, b), max(a, b)))
    return from_pairs(pairs)


@dataclass(frozen=True)
class DescentStats:
    """Descent data of a matching: positions, count, d = count + 1, maj."""

    des_set: tuple[int, ...]
    descent_count: int
    descent_number: int
    major_index: int


def descent_stats(m: Matching) -> DescentStats:
    """Descent set {i : partner[i] > partner[i+1]} and derived statistics."""
    p = m.partner
    des = tuple(i for i in range(1, len(p)) if p[i - 1] > p[i])
    return DescentStats(des, len(des), len(des) + 1, sum(des))


def enumerate_matchings(n: int) -> Iterator[Matching]:
    """Yield every matching of S_{2n} exactly once.

    Deterministic order: the smallest unmatched letter is paired with each
    larger unmatched letter in increasing order, recursively.  Yields
    (2n-1)!! matchings.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    partner = [0] * (2 * n)

    def fill(unmatched: tuple[int, ...]) -> Iterator[Matching]:
        if not unmatched:
            yield Matching(tuple(partner))
            return
        a = unmatched[0]
        rest = unmatched[1:]
        for idx, b in enumerate(rest):
            partner[a - 1] = b
            partner[b - 1] = a
            yield from fill(rest[:idx] + rest[idx + 1 :])

    return fill(tuple(range(1, 2 * n + 1)))


def _rng_for(seed: int, stream: int) -> np.random.Generator:
    if not 0 <= seed <= _UINT64_MAX:
        raise ValueError("seed must be an unsigned 64-bit integer")
    if stream < 0:
        raise ValueError("stream must be non-negative")
    return np.random.default_rng(
        np.random.SeedSequence(entropy=seed, spawn_key=(stream,))
    )


def _random_partner(n: int, rng: np.random.Generator) -> list[int]:
    # One vectorized draw: at step t the smallest unmatched letter is
    # paired with the rank-r remaining letter, r uniform on the 2n-2t-1
    # candidates.
    ranks = rng.integers(0, np.arange(2 * n - 1, 0, -2))
    avail = list(range(1, 2 * n + 1))
    partner = [0] * (2 * n)
    for r in ranks.tolist():
        a = avail.pop(0)
        b = avail.pop(r)
        partner[a - 1] = b
        partner[b - 1] = a
    return partner


def sample_uniform(n: int, seed: int, stream: int = 0) -> Matching:
    """A uniformly random matching of S_{2n}.

    Repeatedly matches the smallest unmatched letter with a uniformly
    random other unmatched letter.  Deterministic for fixed
    (seed, stream); distinct streams give independent sequences, so
    callers may parallelize by assigning one stream per draw.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return Matching(tuple(_random_partner(n, _rng_for(seed, stream))))


_STAT_FIELDS = (
    "mean_d",
    "var_d",
    "second_moment_d",
    "mean_maj",
    "var_maj",
    "second_moment_maj",
    "p_descent",
    "p_joint_adjacent",
    "p_joint_nonadjacent",
)


@dataclass(frozen=True)
class MomentReport:
    """Exact moments of d and maj over the matchings of S_{2n}.

    ``invalid_fields`` marks entries outside the range where they are
    established (closed forms below their n thresholds, joint
    probabilities when no position pair of that kind exists).  Flagged
    fields still carry the raw formula value when one can be evaluated,
    or None otherwise.
    """

    n: int
    mean_d: Fraction
    var_d: Fraction
    second_moment_d: Fraction
    mean_maj: Fraction
    var_maj: Fraction
    second_moment_maj: Fraction
    p_descent: Fraction
    p_joint_adjacent: Fraction | None
    p_joint_nonadjacent: Fraction | None
    invalid_fields: frozenset[str] = frozenset()

    FIELD_NAMES: ClassVar[tuple[str, ...]] = _STAT_FIELDS

    def value(self, name: str) -> Fraction | None:
        if name not in _STAT_FIELDS:
            raise ValueError(f"unknown field {name!r}")
        return getattr(self, name)

    def is_valid(self, name: str) -> bool:
        return name not in self.invalid_fields and self.value(name) is not None


def closed_form_moments(n: int) -> MomentReport:
    """The closed-form moment report.

    Single-position descent probability n/(2n-1), adjacent joint
    probability (n+1)/(3(2n-1)) (established for n >= 3), non-adjacent
    joint probability n(n-1)/((2n-1)(2n-3)) (n >= 4), E d = n + 1,
    Var d = (n+4)(n-1)/(3(2n-1)), E maj = n^2,
    Var maj = 2n(n+4)(n-1)/9 (variances and second moments need n >= 4).
    Below the thresholds the formula value is returned but flagged.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    invalid = set()
    if n < 3:
        invalid.add("p_joint_adjacent")
    if n < 4:
        invalid |= {
            "p_joint_nonadjacent",
            "var_d",
            "second_moment_d",
            "var_maj",
            "second_moment_maj",
        }
    return MomentReport(
        n=n,
        mean_d=Fraction(n + 1),
        var_d=Fraction((n + 4) * (n - 1), 3 * (2 * n - 1)),
        second_moment_d=Fraction(6 * n**3 + 10 * n**2 + 3 * n - 7, 3 * (2 * n - 1)),
        mean_maj=Fraction(n * n),
        var_maj=Fraction(2 * n * (n + 4) * (n - 1), 9),
        second_moment_maj=Fraction(9 * n**4 + 2 * n**3 + 6 * n**2 - 8 * n, 9),
        p_descent=Fraction(n, 2 * n - 1),
        p_joint_adjacent=Fraction(n + 1, 3 * (2 * n - 1)),
        p_joint_nonadjacent=Fraction(n * (n - 1), (2 * n - 1) * (2 * n - 3)),
        invalid_fields=frozenset(invalid),
    )


def brute_force_moments(n: int) -> MomentReport:
    """The same report computed by exhaustive enumeration (the oracle).

    Joint probabilities are averaged over all valid position pairs of
    each kind; cost grows as (2n-1)!!, so keep n small (n <= 6 or so).
    """
    count = 0
    sum_d = sum_d2 = sum_maj = sum_maj2 = 0
    descent_hits = adjacent_hits = nonadjacent_hits = 0
    for m in enumerate_matchings(n):
        st = descent_stats(m)
        count += 1
        d = st.descent_number
        mj = st.major_index
        k = st.descent_count
        sum_d += d
        sum_d2 += d * d
        sum_maj += mj
        sum_maj2 += mj * mj
        descent_hits += k
        des = st.des_set
        adj = sum(1 for a, b in zip(des, des[1:]) if b == a + 1)
        adjacent_hits += adj
        nonadjacent_hits += k * (k - 1) // 2 - adj
    positions = 2 * n - 1
    adjacent_positions = positions - 1
    nonadjacent_positions = positions * (positions - 1) // 2 - adjacent_positions
    p_adj = (
        Fraction(adjacent_hits, count * adjacent_positions)
        if adjacent_positions
        else None
    )
    p_non = (
        Fraction(nonadjacent_hits, count * nonadjacent_positions)
        if nonadjacent_positions
        else None
    )
    invalid = {
        name
        for name, v in (("p_joint_adjacent", p_adj), ("p_joint_nonadjacent", p_non))
        if v is None
    }
    mean_d = Fraction(sum_d, count)
    mean_maj = Fraction(sum_maj, count)
    second_d = Fraction(sum_d2, count)
    second_maj = Fraction(sum_maj2, count)
    return MomentReport(
        n=n,
        mean_d=mean_d,
        var_d=second_d - mean_d**2,
        second_moment_d=second_d,
        mean_maj=mean_maj,
        var_maj=second_maj - mean_maj**2,
        second_moment_maj=second_maj,
        p_descent=Fraction(descent_hits, count * positions),
        p_joint_adjacent=p_adj,
        p_joint_nonadjacent=p_non,
        invalid_fields=frozenset(invalid),
    )


def compare_reports(a: MomentReport, b: MomentReport) -> dict[str, bool | None]:
    """Field-by-field exact equality; None where either side is not valid."""
    out: dict[str, bool | None] = {}
    for name in _STAT_FIELDS:
        if a.is_valid(name) and b.is_valid(name):
            out[name] = a.value(name) == b.value(name)
        else:
            out[name] = None
    return out
