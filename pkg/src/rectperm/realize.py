"""Concrete crossing-free tilings for generic rectangulations, and SVG output.

``realize`` turns a GenRect into coordinates by floorplan compaction: one
constraint graph over the x-coordinates of vertical walls (plus the left
and right border), one over the y-coordinates of horizontal walls (plus
bottom and top).  Each rectangle forces its left wall before its right
wall and its bottom wall before its top wall.  Each wall forces the walls
ending on it, in shuffle order, strictly between its own two end walls.
Longest-path layering then gives small integer coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from typing import Hashable, Sequence

from rectperm.diagrect import DiagRect, Rect, Wall, check_tiling, crosses, extract_walls
from rectperm.errors import CyclicConstraints, NotGeneric
from rectperm.genrect import GenRect, shuffle_alphabets


@dataclass(frozen=True)
class Layout:
    rects: tuple[Rect, ...]
    source: GenRect | None = None

    @property
    def width(self):
        return max(r.x1 for r in self.rects) - min(r.x0 for r in self.rects)

    @property
    def height(self):
        return max(r.y1 for r in self.rects) - min(r.y0 for r in self.rects)


def _bounding_walls(diag: DiagRect):
    """Per rectangle, the variable of the segment containing each of its four edges."""
    n = diag.n
    left = {r.id: "L" for r in diag.rects if r.x0 == 0}
    right = {r.id: "R" for r in diag.rects if r.x1 == n}
    bottom = {r.id: "B" for r in diag.rects if r.y0 == 0}
    top = {r.id: "T" for r in diag.rects if r.y1 == n}
    for i, w in enumerate(diag.walls):
        if w.orientation == "v":
            right.update((v, i) for v in w.side_a)
            left.update((v, i) for v in w.side_b)
        else:
            top.update((v, i) for v in w.side_a)
            bottom.update((v, i) for v in w.side_b)
    return left, right, bottom, top


def _chains(g: GenRect, left, right, bottom, top):
    """Yield (orientation of constrained coordinate, chain of variables)."""
    for w, shuffle in zip(g.walls, g.shuffles):
        first, _ = shuffle_alphabets(w)
        first = set(first)
        if w.orientation == "v":
            lows, highs = w.side_a, w.side_b
            # a left-side entry marks the junction under its bottom edge;
            # a right-side entry the junction over its top edge
            junction = [bottom[v] if v in first else top[v] for v in shuffle]
            yield "y", [bottom[lows[0]], *junction, top[lows[-1]]]
        else:
            above = w.side_b
            # an upper-side entry marks the junction at its right edge;
            # a lower-side entry the junction at its left edge
            junction = [right[v] if v in first else left[v] for v in shuffle]
            yield "x", [left[above[0]], *junction, right[above[-1]]]


def _layer(nodes: Sequence[Hashable], edges: set[tuple[Hashable, Hashable]]) -> dict:
    preds: dict[Hashable, set] = {v: set() for v in nodes}
    for u, v in edges:
        preds[v].add(u)
    try:
        order = list(TopologicalSorter(preds).static_order())
    except CycleError as exc:
        raise CyclicConstraints(f"constraint cycle through {exc.args[1]}") from None
    level: dict[Hashable, int] = {}
    for v in order:
        level[v] = max((level[u] + 1 for u in preds[v]), default=0)
    return level


def realize(g: GenRect) -> Layout:
    diag = g.diag
    left, right, bottom, top = _bounding_walls(diag)
    xs = {"L", "R"} | {i for i, w in enumerate(diag.walls) if w.orientation == "v"}
    ys = {"B", "T"} | {i for i, w in enumerate(diag.walls) if w.orientation == "h"}
    x_edges = {(left[r.id], right[r.id]) for r in diag.rects}
    y_edges = {(bottom[r.id], top[r.id]) for r in diag.rects}
    for axis, chain in _chains(g, left, right, bottom, top):
        target = x_edges if axis == "x" else y_edges
        target.update(zip(chain, chain[1:]))
    key = lambda v: (0, v) if isinstance(v, int) else (1, v)
    X = _layer(sorted(xs, key=key), x_edges)
    Y = _layer(sorted(ys, key=key), y_edges)
    rects = tuple(
        Rect(r.id, X[left[r.id]], Y[bottom[r.id]], X[right[r.id]], Y[top[r.id]]) for r in diag.rects
    )
    return Layout(rects, g)


def _junction_shuffle(w: Wall, by_id: dict[int, Rect]) -> tuple[int, ...]:
    """Read a wall's shuffle from geometry, raising NotGeneric on a cross."""
    events: list[tuple] = []
    a = [by_id[v] for v in w.side_a]
    b = [by_id[v] for v in w.side_b]
    if w.orientation == "v":
        events += [(lo.y1, hi.id) for lo, hi in zip(a, a[1:])]
        events += [(lo.y1, lo.id) for lo, hi in zip(b, b[1:])]
    else:
        events += [(lo.x1, lo.id) for lo, hi in zip(b, b[1:])]
        events += [(lo.x1, hi.id) for lo, hi in zip(a, a[1:])]
    events.sort()
    for (p, _), (q, _) in zip(events, events[1:]):
        if p == q:
            raise NotGeneric(f"cross on wall at {w.orientation}={w.coord}")
    return tuple(v for _, v in events)


def extract(layout: Layout, diag: DiagRect | None = None) -> GenRect:
    """Recover the GenRect of a layout whose rectangles carry diagonal ids."""
    rects = layout.rects
    check_tiling(rects)
    found = crosses(rects)
    if found:
        raise NotGeneric(f"tiling has a cross at {found[0]}")
    if diag is None:
        if layout.source is None:
            raise ValueError("layout has no source; pass the diagonal rectangulation")
        diag = layout.source.diag
    by_id = {r.id: r for r in rects}
    read = {}
    for w in extract_walls(rects):
        read[(w.orientation, frozenset(w.side_a), frozenset(w.side_b))] = _junction_shuffle(w, by_id)
    shuffles = []
    for w in diag.walls:
        k = (w.orientation, frozenset(w.side_a), frozenset(w.side_b))
        if k not in read:
            raise ValueError(f"layout has no wall matching {w}")
        shuffles.append(read[k])
    if len(read) != len(diag.walls):
        raise ValueError("layout has walls not present in the diagonal rectangulation")
    return GenRect(diag, tuple(shuffles))


def _fmt(v) -> str:
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


def render_svg(layout: Layout, scale: float = 40, labels: bool = True, diagonal: bool = False, margin: float = 10) -> str:
    """Deterministic SVG 1.1 text; y is flipped so the tiling reads as drawn."""
    x_min = min(r.x0 for r in layout.rects)
    y_max = max(r.y1 for r in layout.rects)
    width = layout.width * scale + 2 * margin
    height = layout.height * scale + 2 * margin

    def sx(x):
        return Fraction(x - x_min) * Fraction(scale) + Fraction(margin)

    def sy(y):
        return Fraction(y_max - y) * Fraction(scale) + Fraction(margin)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]
    for r in sorted(layout.rects):
        out.append(
            f'  <rect id="r{r.id}" x="{_fmt(sx(r.x0))}" y="{_fmt(sy(r.y1))}" '
            f'width="{_fmt(sx(r.x1) - sx(r.x0))}" height="{_fmt(sy(r.y0) - sy(r.y1))}" '
            'fill="white" stroke="black" stroke-width="1"/>'
        )
    if diagonal:
        out.append(
            f'  <line x1="{_fmt(sx(x_min))}" y1="{_fmt(sy(y_max))}" '
            f'x2="{_fmt(sx(x_min + layout.width))}" y2="{_fmt(sy(y_max - layout.height))}" '
            'stroke="gray" stroke-dasharray="4 3"/>'
        )
    if labels:
        for r in sorted(layout.rects):
            cx = (sx(r.x0) + sx(r.x1)) / 2
            cy = (sy(r.y0) + sy(r.y1)) / 2
            out.append(
                f'  <text x="{_fmt(cx)}" y="{_fmt(cy)}" text-anchor="middle" '
                f'dominant-baseline="central" font-family="sans-serif" font-size="{_fmt(Fraction(scale) * Fraction(2, 5))}">{r.id}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
