"""Generic rectangulations as a diagonal rectangulation plus wall shuffles.

A generic rectangulation is determined by the diagonal rectangulation it
is mosaic-equivalent to, together with one shuffle per wall recording the
bottom-to-top (vertical) or left-to-right (horizontal) order in which the
walls ending on it from either side arrive.  ``GenRect`` stores exactly
that pair, with shuffles listed in the canonical wall order of the
diagonal rectangulation, so equality is structural.

Lattice structure: gamma is a lattice homomorphism, so it induces a
lattice on generic rectangulations of size n.  That lattice is not
modelled here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from rectperm.congruence import GAMMA, class_minimum
from rectperm.diagrect import DiagRect, Staircase, Wall, check_diagonal, compatible_orders, rho
from rectperm.errors import (
    IllegalSlide,
    InternalInvariantViolation,
    InvalidGenRect,
    SizeGuardExceeded,
)
from rectperm.perm import Permutation, _positions

FIBER_GUARD = 8


def shuffle_alphabets(w: Wall) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two id sequences whose interleavings are the legal shuffles of ``w``.

    Vertical: (left side minus its bottom rectangle, right side minus its
    top rectangle), both decreasing.  Horizontal: (upper side minus its
    rightmost rectangle, lower side minus its leftmost), both increasing.
    """
    if w.orientation == "v":
        return w.side_a[1:], w.side_b[:-1]
    return w.side_b[:-1], w.side_a[1:]


def is_interleaving(seq: Sequence[int], a: Sequence[int], b: Sequence[int]) -> bool:
    if len(seq) != len(a) + len(b):
        return False
    ia = ib = 0
    for v in seq:
        if ia < len(a) and v == a[ia]:
            ia += 1
        elif ib < len(b) and v == b[ib]:
            ib += 1
        else:
            return False
    return True


def interleavings(a: Sequence[int], b: Sequence[int]) -> Iterator[tuple[int, ...]]:
    m = len(a) + len(b)
    for slots in itertools.combinations(range(m), len(a)):
        out, ia, ib = [], 0, 0
        chosen = set(slots)
        for i in range(m):
            if i in chosen:
                out.append(a[ia])
                ia += 1
            else:
                out.append(b[ib])
                ib += 1
        yield tuple(out)


@dataclass(frozen=True)
class WallShuffle:
    wall: Wall
    sequence: tuple[int, ...]


@dataclass(frozen=True)
class GenRect:
    diag: DiagRect
    shuffles: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.diag.n

    @property
    def walls(self) -> tuple[Wall, ...]:
        return self.diag.walls

    def wall_shuffles(self) -> list[WallShuffle]:
        return [WallShuffle(w, s) for w, s in zip(self.walls, self.shuffles)]

    def vertical_wall_count(self) -> int:
        return sum(1 for w in self.walls if w.orientation == "v")

    def horizontal_wall_count(self) -> int:
        return sum(1 for w in self.walls if w.orientation == "h")

    def validate(self) -> None:
        """Raise InvalidGenRect naming the first violated invariant."""
        try:
            check_diagonal(self.diag)
        except ValueError as exc:
            raise InvalidGenRect("diagonal-rectangulation", str(exc)) from None
        if len(self.shuffles) != len(self.walls):
            raise InvalidGenRect("one-shuffle-per-wall", f"{len(self.shuffles)} shuffles for {len(self.walls)} walls")
        for i, (w, s) in enumerate(zip(self.walls, self.shuffles)):
            a, b = shuffle_alphabets(w)
            if not is_interleaving(s, a, b):
                raise InvalidGenRect("shuffle-interleaving", f"wall {i}: {list(s)} does not interleave {list(a)} and {list(b)}")


def equals(a: GenRect, b: GenRect) -> bool:
    return a == b


def is_mosaic_equivalent(a: GenRect, b: GenRect) -> bool:
    return a.diag == b.diag


def from_diag(diag: DiagRect, shuffles: Sequence[Sequence[int]]) -> GenRect:
    g = GenRect(diag, tuple(tuple(s) for s in shuffles))
    g.validate()
    return g


def all_genrects(diag: DiagRect) -> Iterator[GenRect]:
    """Every generic rectangulation mosaic-equivalent to ``diag``."""
    choices = [list(interleavings(*shuffle_alphabets(w))) for w in diag.walls]
    for combo in itertools.product(*choices):
        yield GenRect(diag, combo)


def _shuffles_for(perm: Sequence[int], diag: DiagRect) -> tuple[tuple[int, ...], ...]:
    pos = _positions(perm)
    out = []
    for w in diag.walls:
        a, b = shuffle_alphabets(w)
        out.append(tuple(sorted(a + b, key=pos.__getitem__)))
    return tuple(out)


def gamma(perm: Sequence[int]) -> GenRect:
    """rho(perm) together with, on each wall, the order in which perm lists that wall's alphabet."""
    diag = rho(perm)
    return GenRect(diag, _shuffles_for(perm, diag))


def wall_slide(g: GenRect, wall: int, pos: int) -> GenRect:
    """Swap entries ``pos`` and ``pos + 1`` (0-based) of the shuffle on wall ``wall``."""
    seq = list(g.shuffles[wall])
    if not 0 <= pos < len(seq) - 1:
        raise IllegalSlide(f"no adjacent pair at {pos} in shuffle {seq}")
    a, _ = shuffle_alphabets(g.walls[wall])
    if (seq[pos] in a) == (seq[pos + 1] in a):
        raise IllegalSlide(f"{seq[pos]} and {seq[pos + 1]} lie on the same side of the wall")
    seq[pos], seq[pos + 1] = seq[pos + 1], seq[pos]
    shuffles = list(g.shuffles)
    shuffles[wall] = tuple(seq)
    return GenRect(g.diag, tuple(shuffles))


def _predecessors(g: GenRect) -> dict[int, list[int]]:
    prev: dict[int, list[int]] = {}
    for s in g.shuffles:
        for u, v in zip(s, s[1:]):
            prev.setdefault(v, []).append(u)
    return prev


def any_compatible_permutation(g: GenRect) -> Permutation:
    """Greedy preimage of ``g`` under gamma.

    At each step the drawable rectangles (left and bottom edges already in
    the staircase) are scanned from top-left to bottom-right and the first
    one whose shuffle predecessors are all drawn is taken.
    """
    n = g.n
    stair = Staircase(n)
    prev = _predecessors(g)
    done = [False] * (n + 1)
    order: list[int] = []
    by_x = sorted(g.diag.rects, key=lambda r: r.x0)
    while len(order) < n:
        for r in by_x:
            if done[r.id] or not stair.drawable(r):
                continue
            if all(done[u] for u in prev.get(r.id, ())):
                break
        else:
            raise InternalInvariantViolation(f"no drawable rectangle allowed after {order}")
        done[r.id] = True
        order.append(r.id)
        stair.add(r)
    return tuple.__new__(Permutation, order)


def inverse_gamma(g: GenRect) -> Permutation:
    """The unique 2-clumped permutation mapped to ``g``."""
    return class_minimum(any_compatible_permutation(g), GAMMA)


def fiber_gamma(g: GenRect, n: int | None = None) -> set[tuple[int, ...]]:
    if n is None:
        n = g.n
    if n != g.n:
        raise ValueError(f"size {n} does not match rectangulation of size {g.n}")
    if n > FIBER_GUARD:
        raise SizeGuardExceeded("fiber_gamma", n, FIBER_GUARD)
    return {x for x in compatible_orders(g.diag) if _shuffles_for(x, g.diag) == g.shuffles}

