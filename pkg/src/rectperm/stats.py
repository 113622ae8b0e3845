"""Descent and ascent distributions over 2-clumped permutations.

The count of 2-clumped permutations with exactly d right descents is
conjectured to be (n-1)(n-2)...(n-d) times a polynomial of degree 2d;
reference polynomials for d <= 3 are compared against brute force here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from rectperm.enumeration import BRUTE_GUARD, k_clumped_permutations
from rectperm.errors import SizeGuardExceeded, UnsupportedDegree
from rectperm.perm import statistics

STATS = ("right_descents", "left_descents", "left_ascents", "right_ascents")


@dataclass(frozen=True)
class Distribution:
    n: int
    stat: str
    counts: dict[int, int]

    def __getitem__(self, value: int) -> int:
        return self.counts.get(value, 0)

    def total(self) -> int:
        return sum(self.counts.values())


@lru_cache(maxsize=None)
def _histograms(n: int) -> dict[str, tuple[tuple[int, int], ...]]:
    hist = {s: [0] * n for s in STATS}
    for p in k_clumped_permutations(n, 2):
        st = statistics(p)
        hist["left_ascents"][st.left_ascents] += 1
        hist["left_descents"][st.left_descents] += 1
        hist["right_ascents"][st.right_ascents] += 1
        hist["right_descents"][st.right_descents] += 1
    return {s: tuple((v, c) for v, c in enumerate(h) if c) for s, h in hist.items()}


def distribution(n: int, stat: str) -> Distribution:
    """Exact histogram of ``stat`` over the 2-clumped permutations of size n."""
    if stat not in STATS:
        raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")
    if n > BRUTE_GUARD:
        raise SizeGuardExceeded("distribution", n, BRUTE_GUARD)
    if n < 1:
        raise ValueError("n must be >= 1")
    return Distribution(n, stat, dict(_histograms(n)[stat]))


class Polynomial(tuple):
    """Exact polynomial in n; ``coeffs[i]`` multiplies n**i."""

    def __new__(cls, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        return super().__new__(cls, cs)

    @property
    def degree(self) -> int:
        return len(self) - 1 if any(self) else -1

    @property
    def leading(self) -> Fraction:
        return self[-1]

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self):
            acc = acc * n + c
        return acc

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self):
            for j, b in enumerate(other):
                out[i + j] += a * b
        return Polynomial(out)


_PTILDE = {
    0: (Polynomial([1]), 1),
    1: (Polynomial([3, -2, 1]), 3),
    2: (Polynomial([270, -279, 142, -36, 5]), 180),
    3: (Polynomial([37800, -46884, 26000, -8361, 1688, -213, 14]), 15120),
}


@dataclass(frozen=True)
class ConjecturePolynomial:
    d: int
    ptilde: Polynomial

    @property
    def full(self) -> Polynomial:
        """(n-1)(n-2)...(n-d) * ptilde."""
        p = Polynomial([1])
        for i in range(1, self.d + 1):
            p = p * Polynomial([-i, 1])
        return p * self.ptilde

    def __call__(self, n: int) -> Fraction:
        return self.full(n)


def ptilde_reference(d: int) -> ConjecturePolynomial:
    if d not in _PTILDE:
        raise UnsupportedDegree(f"reference polynomial known only for d in 0..3, got {d}")
    num, den = _PTILDE[d]
    return ConjecturePolynomial(d, Polynomial(c / den for c in num))


def predicted_leading_coefficient(d: int) -> Fraction:
    return Fraction(2 ** (d + 1), math.factorial(d) * math.factorial(d + 1) * math.factorial(d + 2))


class ConjectureRow(NamedTuple):
    d: int
    n: int
    brute_count: int
    formula_value: Fraction
    match: bool


def check_conjecture(d: int, n_range: Iterable[int]) -> list[ConjectureRow]:
    """Compare brute-force right-descent counts with the reference polynomial.

    Mismatches are reported in the rows; nothing is raised for them.
    """
    poly = ptilde_reference(d)
    rows = []
    for n in n_range:
        brute = distribution(n, "right_descents")[d]
        value = poly(n)
        rows.append(ConjectureRow(d, n, brute, value, value == brute))
    return rows


def conjecture_csv(rows: Iterable[ConjectureRow]) -> str:
    lines = ["d,n,brute_count,formula_value,match"]
    for r in rows:
        lines.append(f"{r.d},{r.n},{r.brute_count},{r.formula_value},{str(r.match).lower()}")
    return "\n".join(lines) + "\n"


def interpolate(points: Iterable[tuple[int, Fraction]]) -> Polynomial:
    """Lagrange interpolation with exact rational arithmetic."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    total = Polynomial([0])
    for i, (xi, yi) in enumerate(pts):
        term = Polynomial([yi])
        for j, (xj, _) in enumerate(pts):
            if j != i:
                term = term * Polynomial([-xj / (xi - xj), 1 / (xi - xj)])
        total = Polynomial(a + b for a, b in _zip_pad(total, term))
    return total


def _zip_pad(p: Polynomial, q: Polynomial):
    m = max(len(p), len(q))
    return zip(list(p) + [0] * (m - len(p)), list(q) + [0] * (m - len(q)))


def fit_ptilde(d: int, n_values: Iterable[int]) -> Polynomial:
    """Degree-2d polynomial through count/((n-1)...(n-d)) at the given n (each n > d).

    Needs 2d+1 points; extra points are not used for the fit.
    """
    ns = sorted(n_values)
    if len(ns) < 2 * d + 1 or ns[0] <= d:
        raise ValueError(f"need {2 * d + 1} values of n, all > {d}")
    pts = []
    for n in ns[: 2 * d + 1]:
        pts.append((n, Fraction(distribution(n, "right_descents")[d], math.perm(n - 1, d))))
    return interpolate(pts)
