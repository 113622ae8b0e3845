"""Permutations in one-line notation, dashed patterns and clumps.

Positions are 1-based throughout the public API, matching the usual
x_1 ... x_n convention; internally everything is a plain tuple.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from rectperm.errors import NotADescent


class Permutation(tuple):
    """An immutable permutation of {1, ..., n} in one-line notation."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        n = len(self)
        if n < 1 or sorted(self) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {tuple(self)!r}")
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"3,1,2"`` (or whitespace separated, or ``"312"`` when n < 10)."""
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
        else:
            parts = list(text)
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def reverse(self) -> "Permutation":
        return Permutation(self[::-1])

    def inversions(self) -> int:
        return sum(1 for i, j in itertools.combinations(range(len(self)), 2) if self[i] > self[j])

    def swap(self, index: int) -> "Permutation":
        """Return the permutation with positions ``index`` and ``index + 1`` exchanged."""
        w = list(self)
        w[index - 1], w[index] = w[index], w[index - 1]
        return Permutation(w)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def all_permutations(n: int) -> Iterator[Permutation]:
    for p in itertools.permutations(range(1, n + 1)):
        yield tuple.__new__(Permutation, p)


@dataclass(frozen=True)
class DashedPattern:
    """A Babson-Steingrimsson pattern such as ``3-51-2-4``.

    ``adjacent[j]`` is true when letters j and j+1 (0-based) carry no dash,
    so their images must occupy consecutive positions.
    """

    ranks: tuple[int, ...]
    adjacent: tuple[bool, ...]

    def __post_init__(self):
        k = len(self.ranks)
        if k < 1 or sorted(self.ranks) != list(range(1, k + 1)):
            raise ValueError(f"pattern ranks must be a permutation of 1..{k}")
        if len(self.adjacent) != k - 1:
            raise ValueError("adjacent must have length k-1")

    @classmethod
    def parse(cls, text: str) -> "DashedPattern":
        ranks: list[int] = []
        adjacent: list[bool] = []
        dash = False
        for ch in text.strip():
            if ch == "-":
                if not ranks or dash:
                    raise ValueError(f"misplaced dash in {text!r}")
                dash = True
                continue
            if not ch.isdigit():
                raise ValueError(f"bad pattern character {ch!r} in {text!r}")
            if ranks:
                adjacent.append(not dash)
            ranks.append(int(ch))
            dash = False
        if dash:
            raise ValueError(f"trailing dash in {text!r}")
        return cls(tuple(ranks), tuple(adjacent))

    def __len__(self) -> int:
        return len(self.ranks)

    def __str__(self) -> str:
        out = [str(self.ranks[0])]
        for r, adj in zip(self.ranks[1:], self.adjacent):
            out.append(str(r) if adj else f"-{r}")
        return "".join(out)


def find_occurrence(pattern: DashedPattern, perm: Sequence[int]) -> tuple[int, ...] | None:
    """Lexicographically smallest occurrence of ``pattern`` in ``perm``.

    Returns the 1-based positions of the occurrence, or None.
    """
    k, n = len(pattern.ranks), len(perm)
    if k > n:
        return None
    ranks, adjacent = pattern.ranks, pattern.adjacent
    chosen: list[int] = []

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        if j > 0 and adjacent[j - 1]:
            candidates: Iterable[int] = (start,) if start < n else ()
        else:
            # leave room for the k - j - 1 letters still to place
            candidates = range(start, n - (k - j) + 1)
        rj = ranks[j]
        for pos in candidates:
            v = perm[pos]
            if all((perm[q] < v) == (ranks[t] < rj) for t, q in enumerate(chosen)):
                chosen.append(pos)
                if extend(j + 1, pos + 1):
                    return True
                chosen.pop()
        return False

    if extend(0, 0):
        return tuple(p + 1 for p in chosen)
    return None


def avoids_all(perm: Sequence[int], patterns: Iterable[DashedPattern]) -> bool:
    return all(find_occurrence(p, perm) is None for p in patterns)


class Clump(NamedTuple):
    lo: int
    hi: int
    side: str  # "before" or "after" the descent pair

    @property
    def values(self) -> range:
        return range(self.lo, self.hi + 1)


def _positions(perm: Sequence[int]) -> list[int]:
    pos = [0] * (len(perm) + 1)
    for i, v in enumerate(perm):
        pos[v] = i
    return pos


def clumps_of_descent(perm: Sequence[int], index: int) -> list[Clump]:
    """Clumps of the descent at 1-based position ``index``, ordered by value."""
    if not 1 <= index < len(perm):
        raise NotADescent(f"position {index} out of range")
    hi_v, lo_v = perm[index - 1], perm[index]
    if hi_v < lo_v:
        raise NotADescent(f"position {index} is an ascent ({hi_v} < {lo_v})")
    pos = _positions(perm)
    clumps: list[Clump] = []
    for v in range(lo_v + 1, hi_v):
        side = "before" if pos[v] < index - 1 else "after"
        if clumps and clumps[-1].side == side:
            clumps[-1] = clumps[-1]._replace(hi=v)
        else:
            clumps.append(Clump(v, v, side))
    return clumps


def clump_count(perm: Sequence[int], index: int, pos: Sequence[int] | None = None) -> int:
    """Number of clumps of the descent at 1-based ``index`` (no validation)."""
    if pos is None:
        pos = _positions(perm)
    a, e = perm[index], perm[index - 1]
    if e - a < 2:
        return 0
    count = 1
    prev = pos[a + 1] < index
    for v in range(a + 2, e):
        side = pos[v] < index
        if side != prev:
            count += 1
            prev = side
    return count


def is_k_clumped(perm: Sequence[int], k: int) -> bool:
    """True iff every descent of ``perm`` has at most ``k`` clumps.

    By convention k = -1 admits only the identity.
    """
    if k < -1:
        raise ValueError("k must be >= -1")
    n = len(perm)
    if k == -1:
        return all(perm[i] < perm[i + 1] for i in range(n - 1))
    pos = None
    for i in range(1, n):
        if perm[i - 1] > perm[i]:
            if perm[i - 1] - perm[i] - 1 <= k:
                continue
            if pos is None:
                pos = _positions(perm)
            if clump_count(perm, i, pos) > k:
                return False
    return True


def k_clumped_pattern_count(k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k % 2 == 0:
        return 2 * math.factorial(k // 2) * math.factorial(k // 2 + 1)
    return 2 * math.factorial((k + 1) // 2) ** 2


def k_clumped_patterns(k: int) -> list[DashedPattern]:
    """The dashed patterns whose joint avoidance defines k-clumped permutations.

    Each pattern is a descent ``(k+3) 1`` together with k+1 intermediate
    values whose sides alternate; the values on each side appear in every
    possible relative order.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    top = k + 3
    middle = list(range(2, top))
    out: list[DashedPattern] = []
    for first_side in (0, 1):
        sides = [(first_side + j) % 2 for j in range(k + 1)]
        before = [v for v, s in zip(middle, sides) if s == 0]
        after = [v for v, s in zip(middle, sides) if s == 1]
        for pre in itertools.permutations(before):
            for post in itertools.permutations(after):
                ranks = (*pre, top, 1, *post)
                adjacent = [False] * (top - 1)
                adjacent[len(pre)] = True
                out.append(DashedPattern(ranks, tuple(adjacent)))
    return sorted(set(out), key=str)


TWO_CLUMPED_PATTERNS = tuple(map(DashedPattern.parse, ("3-51-2-4", "3-51-4-2", "2-4-51-3", "4-2-51-3")))
TWISTED_BAXTER_PATTERNS = tuple(map(DashedPattern.parse, ("2-41-3", "3-41-2")))
ZERO_CLUMPED_PATTERNS = tuple(map(DashedPattern.parse, ("31-2", "2-31")))
BAXTER_PATTERNS = tuple(map(DashedPattern.parse, ("3-14-2", "2-41-3")))


class Statistics(NamedTuple):
    left_ascents: int
    left_descents: int
    right_ascents: int
    right_descents: int


def statistics(perm: Sequence[int]) -> Statistics:
    n = len(perm)
    right_descents = sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])
    pos = _positions(perm)
    left_descents = sum(1 for v in range(2, n + 1) if pos[v - 1] > pos[v])
    return Statistics(n - 1 - left_descents, left_descents, n - 1 - right_descents, right_descents)


class CoverMove(NamedTuple):
    """Swap of the adjacent descent ``high, low`` at positions index, index+1."""

    index: int
    high: int
    low: int


def descents(perm: Sequence[int]) -> list[CoverMove]:
    return [
        CoverMove(i, perm[i - 1], perm[i]) for i in range(1, len(perm)) if perm[i - 1] > perm[i]
    ]


def covers_down(perm: Sequence[int]) -> list[tuple[Permutation, CoverMove]]:
    """Every permutation covered by ``perm`` in the weak order, with its move."""
    out = []
    for move in descents(perm):
        w = list(perm)
        w[move.index - 1], w[move.index] = move.low, move.high
        out.append((tuple.__new__(Permutation, w), move))
    return out


def is_baxter(perm: Sequence[int]) -> bool:
    return avoids_all(perm, BAXTER_PATTERNS)
