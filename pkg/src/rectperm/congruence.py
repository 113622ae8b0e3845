"""Cover-equivalence tests on the weak order and congruence classes.

Two congruences matter here: the one whose classes are the fibers of
``rho`` (class minima are the twisted Baxter permutations) and the one
whose classes are the fibers of ``gamma`` (class minima are the
2-clumped permutations).  A congruence on a finite lattice is fixed by
which cover relations it contracts, so each is given by a cover test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from rectperm.errors import InvalidMove, SizeGuardExceeded
from rectperm.perm import CoverMove, Permutation, _positions, clump_count, descents

CLASS_GUARD = 12


def _sides(y: Sequence[int], move: CoverMove) -> tuple[int, int, list[bool]]:
    """Validate ``move`` on ``y``; return (a, e, before-flags for a+1..e-1)."""
    i = move.index
    if not 1 <= i < len(y) or y[i - 1] != move.high or y[i] != move.low or move.high <= move.low:
        raise InvalidMove(f"{move} is not a descent of {Permutation(y)}")
    pos = _positions(y)
    a, e = move.low, move.high
    return a, e, [pos[v] < i - 1 for v in range(a + 1, e)]


def gamma_cover_equivalent(y: Sequence[int], move: CoverMove) -> bool:
    """Is there a < b < c < d < e with b, d on one side of ``e a`` and c on the other?"""
    _, _, before = _sides(y, move)
    m = len(before)
    for ib in range(m):
        for ic in range(ib + 1, m):
            if before[ic] == before[ib]:
                continue
            for id_ in range(ic + 1, m):
                if before[id_] == before[ib]:
                    return True
    return False


def rho_cover_equivalent(y: Sequence[int], move: CoverMove) -> bool:
    """Is there a < b < c < d with b and c on opposite sides of ``d a``?"""
    _, _, before = _sides(y, move)
    return any(before[i] != before[j] for i in range(len(before)) for j in range(i + 1, len(before)))


def k_cover_equivalent(y: Sequence[int], move: CoverMove, k: int) -> bool:
    """Extrapolated test: k+1 values between ``low`` and ``high`` with alternating sides.

    Equivalent to the descent ``high low`` of ``y`` having at least k+1 clumps.
    Only k = 1 and k = 2 are backed by theory; larger k is a guess.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _sides(y, move)
    return clump_count(y, move.index) >= k + 1


@dataclass(frozen=True)
class CoverTest:
    """Which weak-order covers a congruence contracts.

    ``k=2`` is the gamma congruence, ``k=1`` the rho congruence.  Other
    values of k need ``extrapolated=True``.
    """

    k: int
    extrapolated: bool = False

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("cover tests need k >= 1")
        if self.k > 2 and not self.extrapolated:
            raise ValueError(f"k={self.k} cover test is an extrapolation; pass extrapolated=True")

    @property
    def name(self) -> str:
        return {1: "rho-test", 2: "gamma-test"}.get(self.k, f"k-test({self.k})")

    def __call__(self, y: Sequence[int], move: CoverMove) -> bool:
        if self.k == 2:
            return gamma_cover_equivalent(y, move)
        if self.k == 1:
            return rho_cover_equivalent(y, move)
        return k_cover_equivalent(y, move, self.k)


GAMMA = CoverTest(2)
RHO = CoverTest(1)


@dataclass(frozen=True)
class CongruenceClass:
    members: frozenset
    minimum: Permutation

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.members


def _swap(w: Sequence[int], i: int) -> tuple[int, ...]:
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def congruence_class(perm: Sequence[int], test: CoverTest = GAMMA) -> CongruenceClass:
    """Closure of ``perm`` under contracted covers, explored breadth first."""
    n = len(perm)
    if n > CLASS_GUARD:
        raise SizeGuardExceeded("congruence_class", n, CLASS_GUARD)
    start = tuple(perm)
    seen = {start}
    queue = deque([start])
    while queue:
        z = queue.popleft()
        for i in range(1, n):
            w = _swap(z, i)
            if w in seen:
                continue
            # the cover is always judged from its upper element
            if z[i - 1] > z[i]:
                ok = test(z, CoverMove(i, z[i - 1], z[i]))
            else:
                ok = test(w, CoverMove(i, w[i - 1], w[i]))
            if ok:
                seen.add(w)
                queue.append(w)
    minima = [w for w in seen if not any(
        w[i - 1] > w[i] and _swap(w, i) in seen for i in range(1, n))]
    if len(minima) != 1:
        raise AssertionError(f"class of {start} has {len(minima)} minimal elements")
    return CongruenceClass(frozenset(seen), tuple.__new__(Permutation, minima[0]))


def class_minimum(perm: Sequence[int], test: CoverTest = GAMMA, *, debug: bool = False) -> Permutation:
    """Descend along contracted down-covers until none is left.

    Classes are intervals, so the end point does not depend on which
    contracted cover is taken at each step.  With ``debug`` the result is
    compared with a full closure (small n only).
    """
    w = tuple(perm)
    moved = True
    while moved:
        moved = False
        for move in descents(w):
            if test(w, move):
                w = _swap(w, move.index)
                moved = True
                break
    result = tuple.__new__(Permutation, w)
    if debug and len(w) <= 6:
        expected = congruence_class(perm, test).minimum
        if expected != result:
            raise AssertionError(f"greedy minimum {result} != closure minimum {expected}")
    return result


def is_class_minimum(perm: Sequence[int], test: CoverTest = GAMMA) -> bool:
    return not any(test(perm, move) for move in descents(perm))
