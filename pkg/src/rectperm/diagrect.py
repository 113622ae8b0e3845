"""Diagonal rectangulations and the map rho.

Coordinates: the square is [0, n] x [0, n] with y pointing up and the
diagonal running from (0, n) to (n, 0).  Diagonal point i sits at
(i, n - i), so rectangle v is the one whose interior meets the diagonal
between points v - 1 and v.  With this convention every corner produced
by ``rho`` is integral and two diagonal rectangulations are equal iff
their coordinates are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence, Union

from rectperm.errors import NotATiling, SizeGuardExceeded, SizeMismatch

Number = Union[int, Fraction]

FIBER_GUARD = 10


class Rect(NamedTuple):
    id: int
    x0: Number
    y0: Number
    x1: Number
    y1: Number

    @property
    def area(self) -> Number:
        return (self.x1 - self.x0) * (self.y1 - self.y0)


class Wall(NamedTuple):
    """A maximal segment of the tiling's interior edges.

    For vertical walls ``side_a``/``side_b`` are the rectangles to the
    left/right, listed bottom to top; for horizontal walls they are the
    rectangles below/above, listed left to right.
    """

    orientation: str  # "v" or "h"
    coord: Number
    lo: Number
    hi: Number
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]

    @property
    def key(self) -> tuple:
        return (self.orientation != "v", self.coord, self.lo)


class Staircase:
    """Top-right boundary of a left- and bottom-justified union of rectangles.

    ``heights[c]`` is the height of the union over the unit column
    [c, c+1]; heights are weakly decreasing.  The left and bottom edges of
    the square always belong to the region.
    """

    def __init__(self, n: int):
        self.n = n
        self.heights = [0] * n

    def contains(self, x: Number, y: Number) -> bool:
        if x == 0 or y == 0:
            return True
        if x > self.n or y > self.n:
            return False
        return y <= self.height_at(x)

    def height_at(self, x: Number) -> Number:
        """Highest point of the region on the vertical line through x."""
        if x == 0:
            return self.n
        return self.heights[int(x) - 1] if x == int(x) else self.heights[int(x)]

    def reach_at(self, y: Number) -> int:
        """Rightmost x such that (x, y) lies in the region."""
        if y == 0:
            return self.n
        return sum(1 for h in self.heights if h >= y)

    def left_edge_inside(self, r: Rect) -> bool:
        return r.x0 == 0 or self.heights[r.x0 - 1] >= r.y1

    def bottom_edge_inside(self, r: Rect) -> bool:
        return r.y0 == 0 or self.heights[r.x1 - 1] >= r.y0

    def drawable(self, r: Rect) -> bool:
        return self.bottom_edge_inside(r) and self.left_edge_inside(r)

    def add(self, r: Rect) -> None:
        for c in range(r.x0, r.x1):
            self.heights[c] = r.y1

    def remove(self, r: Rect) -> None:
        for c in range(r.x0, r.x1):
            self.heights[c] = r.y0

    def vertices(self) -> list[tuple[int, int]]:
        """Corner list of the boundary from (0, n) to (n, 0)."""
        pts = [(0, self.n)]
        prev = self.n
        for c, h in enumerate(self.heights):
            if h != prev:
                pts += [(c, prev), (c, h)]
                prev = h
        pts += [(self.n, prev), (self.n, 0)]
        return [p for i, p in enumerate(pts) if i == 0 or p != pts[i - 1]]


@dataclass(frozen=True)
class DiagRect:
    """A diagonal rectangulation; ``rects[v - 1]`` is rectangle v."""

    n: int
    rects: tuple[Rect, ...]
    _walls: tuple[Wall, ...] = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if len(self.rects) != self.n or any(r.id != i for i, r in enumerate(self.rects, 1)):
            raise ValueError("rects must be listed by id 1..n")

    @property
    def walls(self) -> tuple[Wall, ...]:
        if self._walls is None:
            object.__setattr__(self, "_walls", _walls_cached(self.rects))
        return self._walls

    def rect(self, v: int) -> Rect:
        return self.rects[v - 1]

    def key(self) -> tuple:
        return tuple(tuple(r[1:]) for r in self.rects)


def rho(perm: Sequence[int]) -> DiagRect:
    """Draw rectangles x_1, x_2, ... in turn, each against the current staircase."""
    n = len(perm)
    stair = Staircase(n)
    rects: list[Rect | None] = [None] * n
    for v in perm:
        px, py = v - 1, n - v + 1  # diagonal point above/left of label v
        qx, qy = v, n - v  # diagonal point below/right of label v
        if stair.contains(px, py):
            left, top = px, stair.height_at(px)
        else:
            left, top = stair.reach_at(py), py
        if stair.contains(qx, qy):
            right, bottom = stair.reach_at(qy), qy
        else:
            right, bottom = qx, stair.height_at(qx)
        r = Rect(v, left, bottom, right, top)
        stair.add(r)
        rects[v - 1] = r
    return DiagRect(n, tuple(rects))


def is_compatible(perm: Sequence[int], r: DiagRect) -> bool:
    """Does drawing rectangles in the order ``perm`` keep the union justified?"""
    if len(perm) != r.n:
        raise SizeMismatch(f"permutation of length {len(perm)} vs rectangulation of size {r.n}")
    stair = Staircase(r.n)
    for v in perm:
        rect = r.rect(v)
        if not stair.drawable(rect):
            return False
        stair.add(rect)
    return True


def compatible_orders(r: DiagRect) -> Iterator[tuple[int, ...]]:
    stair = Staircase(r.n)
    done = [False] * (r.n + 1)
    order: list[int] = []

    def dfs() -> Iterator[tuple[int, ...]]:
        if len(order) == r.n:
            yield tuple(order)
            return
        for rect in r.rects:
            if not done[rect.id] and stair.drawable(rect):
                done[rect.id] = True
                order.append(rect.id)
                stair.add(rect)
                yield from dfs()
                stair.remove(rect)
                order.pop()
                done[rect.id] = False

    yield from dfs()


def fiber_rho(r: DiagRect) -> set[tuple[int, ...]]:
    """All permutations compatible with ``r``, i.e. the fiber of rho over r."""
    if r.n > FIBER_GUARD:
        raise SizeGuardExceeded("fiber_rho", r.n, FIBER_GUARD)
    return set(compatible_orders(r))


def _merge(segments: list[tuple[Number, Number]]) -> list[tuple[Number, Number]]:
    out: list[list[Number]] = []
    for lo, hi in sorted(segments):
        if out and lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def extract_walls(rects: Sequence[Rect]) -> tuple[Wall, ...]:
    """All maximal walls of a tiling, sorted vertical first, then by coord and lo."""
    xmax = max(r.x1 for r in rects)
    ymax = max(r.y1 for r in rects)
    vertical: dict[Number, list] = {}
    horizontal: dict[Number, list] = {}
    for r in rects:
        if r.x1 != xmax:
            vertical.setdefault(r.x1, []).append((r.y0, r.y1))
        if r.y1 != ymax:
            horizontal.setdefault(r.y1, []).append((r.x0, r.x1))
    walls: list[Wall] = []
    for x in sorted(vertical):
        for lo, hi in _merge(vertical[x]):
            left = sorted((r for r in rects if r.x1 == x and lo <= r.y0 and r.y1 <= hi), key=lambda r: r.y0)
            right = sorted((r for r in rects if r.x0 == x and lo <= r.y0 and r.y1 <= hi), key=lambda r: r.y0)
            walls.append(Wall("v", x, lo, hi, tuple(r.id for r in left), tuple(r.id for r in right)))
    for y in sorted(horizontal):
        for lo, hi in _merge(horizontal[y]):
            below = sorted((r for r in rects if r.y1 == y and lo <= r.x0 and r.x1 <= hi), key=lambda r: r.x0)
            above = sorted((r for r in rects if r.y0 == y and lo <= r.x0 and r.x1 <= hi), key=lambda r: r.x0)
            walls.append(Wall("h", y, lo, hi, tuple(r.id for r in below), tuple(r.id for r in above)))
    return tuple(walls)


_walls_cached = lru_cache(maxsize=1 << 16)(extract_walls)


def walls(r: DiagRect) -> tuple[Wall, ...]:
    return r.walls


def check_tiling(rects: Sequence[Rect]) -> None:
    """Raise NotATiling unless ``rects`` tile their bounding box."""
    if not rects:
        raise NotATiling("no rectangles")
    for r in rects:
        if not (r.x0 < r.x1 and r.y0 < r.y1):
            raise NotATiling(f"degenerate rectangle {r}")
    xmin = min(r.x0 for r in rects)
    ymin = min(r.y0 for r in rects)
    xmax = max(r.x1 for r in rects)
    ymax = max(r.y1 for r in rects)
    for a, b in combinations(rects, 2):
        if a.x0 < b.x1 and b.x0 < a.x1 and a.y0 < b.y1 and b.y0 < a.y1:
            raise NotATiling(f"rectangles {a.id} and {b.id} overlap")
    if sum(r.area for r in rects) != (xmax - xmin) * (ymax - ymin):
        raise NotATiling("rectangles do not cover their bounding box")


def crosses(rects: Sequence[Rect]) -> list[tuple[Number, Number]]:
    """Points that are a corner of four distinct rectangles."""
    corners: dict[tuple[Number, Number], int] = {}
    for r in rects:
        for pt in ((r.x0, r.y0), (r.x0, r.y1), (r.x1, r.y0), (r.x1, r.y1)):
            corners[pt] = corners.get(pt, 0) + 1
    return sorted(pt for pt, c in corners.items() if c >= 4)


def is_generic_tiling(rects: Sequence[Rect]) -> bool:
    check_tiling(rects)
    return not crosses(rects)


def check_diagonal(r: DiagRect) -> None:
    """Raise ValueError unless ``r`` is a valid canonical diagonal rectangulation."""
    n = r.n
    check_tiling(r.rects)
    if (min(x.x0 for x in r.rects), min(x.y0 for x in r.rects)) != (0, 0) or (
        max(x.x1 for x in r.rects), max(x.y1 for x in r.rects)) != (n, n):
        raise NotATiling(f"rectangles do not tile [0,{n}]^2")
    for rect in r.rects:
        # the diagonal x + y = n crosses rect on x in (max(x0, n-y1), min(x1, n-y0))
        if (max(rect.x0, n - rect.y1), min(rect.x1, n - rect.y0)) != (rect.id - 1, rect.id):
            raise ValueError(f"rectangle {rect.id} does not meet the diagonal in segment {rect.id}")
    if crosses(r.rects):
        raise ValueError("tiling has a cross")
