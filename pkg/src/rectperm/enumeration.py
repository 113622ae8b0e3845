"""Generating-tree enumeration of 2-clumped and 1-clumped permutations.

Each 2-clumped permutation is encoded by a word over ``n e f l u``: one
letter per entry where n+1 may be inserted (``n`` marks the maximum), in
left-to-right order.  Inserting ``n`` before a letter (or at the end)
rewrites the prefix ``n->e, f->l, u->deleted`` and the suffix
``n->f, e->u, l->deleted``.  Only multiplicities of words are kept, so
level n needs far fewer states than |G_n|.

All counts are Python ints (exact, unbounded).
"""

from __future__ import annotations

import io
import itertools
import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from rectperm.errors import MemoryBudgetExceeded, NotTwoClumped, SizeGuardExceeded
from rectperm.perm import is_k_clumped

BRUTE_GUARD = 10

_PREFIX_2 = str.maketrans({"n": "e", "f": "l", "u": None})
_SUFFIX_2 = str.maketrans({"n": "f", "e": "u", "l": None})
_PREFIX_1 = str.maketrans({"n": "e", "f": None})
_SUFFIX_1 = str.maketrans({"n": "f", "e": None})


def _letter(beta: set[int], a: int, n: int) -> str:
    if a == n:
        return "n"
    if not beta:
        return "e"
    lo, hi = min(beta), max(beta)
    if len(beta) != hi - lo + 1:
        return ""
    if lo == a + 1:
        return "f" if hi == n else "l"
    if hi == n:
        return "u"
    return ""


def _encode(perm: Sequence[int], alphabet: str) -> str:
    n = len(perm)
    seen: set[int] = set()
    out = []
    for a in perm:
        beta = {b for b in seen if b > a}
        letter = _letter(beta, a, n)
        if letter and letter in alphabet:
            out.append(letter)
        seen.add(a)
    return "".join(out)


def encode_2clumped(perm: Sequence[int]) -> str:
    if not is_k_clumped(perm, 2):
        raise NotTwoClumped(f"{','.join(map(str, perm))} is not 2-clumped")
    return _encode(perm, "nuefl")


def encode_1clumped(perm: Sequence[int]) -> str:
    if not is_k_clumped(perm, 1):
        raise ValueError(f"{','.join(map(str, perm))} is not 1-clumped")
    return _encode(perm, "nef")


def children_2clumped(s: str) -> list[str]:
    """Words obtained by inserting ``n`` before each letter of ``s``, then at the end."""
    return [s[:i].translate(_PREFIX_2) + "n" + s[i:].translate(_SUFFIX_2) for i in range(len(s) + 1)]


def children_1clumped(s: str) -> list[str]:
    return [s[:i].translate(_PREFIX_1) + "n" + s[i:].translate(_SUFFIX_1) for i in range(len(s) + 1)]


@dataclass
class CountMap:
    """Multiset of words at one level of the generating tree."""

    level: int
    entries: dict[str, int] = field(default_factory=dict)

    @classmethod
    def seed(cls) -> "CountMap":
        return cls(1, {"n": 1})

    def total(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def dumps(self) -> str:
        """Checkpoint text: one ``word<TAB>multiplicity`` line per word, sorted."""
        buf = io.StringIO()
        buf.write(f"# level {self.level}\n")
        for word in sorted(self.entries):
            buf.write(f"{word}\t{self.entries[word]}\n")
        return buf.getvalue()

    @classmethod
    def loads(cls, text: str) -> "CountMap":
        level = None
        entries: dict[str, int] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            if line.startswith("#"):
                level = int(line.split()[-1])
                continue
            word, mult = line.split("\t")
            entries[word] = int(mult)
        if level is None:
            raise ValueError("checkpoint is missing its '# level N' header")
        return cls(level, entries)


def _grow_bucket(items: list[tuple[str, int]], children: Callable[[str], list[str]]) -> Counter:
    out: Counter = Counter()
    for word, mult in items:
        for child in children(word):
            out[child] += mult
    return out


def grow(cm: CountMap, children: Callable[[str], list[str]] = children_2clumped, threads: int = 1) -> CountMap:
    """One level of the generating tree.

    The words are split into ``threads`` buckets by sorted order, grown
    independently and merged in bucket order, so the result does not
    depend on ``threads``.
    """
    items = sorted(cm.entries.items())
    if threads <= 1 or len(items) < 2 * threads:
        merged = _grow_bucket(items, children)
    else:
        size = -(-len(items) // threads)
        buckets = [items[i:i + size] for i in range(0, len(items), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _grow_bucket(b, children), buckets))
        merged = Counter()
        for part in parts:
            for word, mult in part.items():
                merged[word] += mult
    return CountMap(cm.level + 1, dict(merged))


def levels(
    n_max: int,
    children: Callable[[str], list[str]] = children_2clumped,
    threads: int = 1,
    mem_cap: int | None = None,
) -> Iterator[CountMap]:
    """Yield the CountMap of every level 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    cm = CountMap.seed()
    yield cm
    while cm.level < n_max:
        cm = grow(cm, children, threads)
        if mem_cap is not None and len(cm) > mem_cap:
            raise MemoryBudgetExceeded(cm.level, len(cm), mem_cap)
        yield cm


def count_2clumped(n_max: int, threads: int = 1, mem_cap: int | None = None) -> list[int]:
    """[|G_1|, ..., |G_n_max|], the numbers of generic rectangulations."""
    return [cm.total() for cm in levels(n_max, children_2clumped, threads, mem_cap)]


def count_1clumped(n_max: int, threads: int = 1) -> list[int]:
    return [cm.total() for cm in levels(n_max, children_1clumped, threads)]


def baxter_table(n_max: int) -> list[dict[tuple[int, int], int]]:
    """G(n, i, j): multiplicity of the word e^i n f^j at each level 1..n_max.

    Inserting before one of the i e's or before n gives (t, j+1) for
    t = 0..i; inserting after n with s f's to its left gives (i+1, j-s).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    table = {(0, 0): 1}
    out = [table]
    for _ in range(n_max - 1):
        nxt: Counter = Counter()
        for (i, j), mult in table.items():
            for t in range(i + 1):
                nxt[(t, j + 1)] += mult
            for s in range(j + 1):
                nxt[(i + 1, j - s)] += mult
        table = dict(nxt)
        out.append(table)
    return out


def count_1clumped_table(n_max: int) -> list[int]:
    return [sum(t.values()) for t in baxter_table(n_max)]


def baxter_closed_form(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    c = math.comb
    total = sum(c(n + 1, k - 1) * c(n + 1, k) * c(n + 1, k + 1) for k in range(1, n + 1))
    q, r = divmod(total, c(n + 1, 1) * c(n + 1, 2))
    assert r == 0, "Baxter formula must divide exactly"
    return q


def baxter_by_ascents(n: int) -> list[int]:
    """The k-th summand of the Baxter formula, k = 1..n (permutations with k-1 ascents)."""
    c = math.comb
    d = c(n + 1, 1) * c(n + 1, 2)
    terms = []
    for k in range(1, n + 1):
        q, r = divmod(c(n + 1, k - 1) * c(n + 1, k) * c(n + 1, k + 1), d)
        assert r == 0
        terms.append(q)
    return terms


def k_clumped_permutations(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Every k-clumped permutation of size n, in lexicographic order.

    Exhaustive search over S_n, pruned as soon as a descent is placed:
    the side of every value between the descent's entries is already
    known at that moment (placed means before, unplaced means after).
    """
    if k < -1:
        raise ValueError("k must be >= -1")
    word = [0] * n
    full = (1 << (n + 1)) - 2

    def rec(i: int, placed: int, last: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(word)
            return
        free = full & ~placed
        while free:
            bit = free & -free
            free ^= bit
            v = bit.bit_length() - 1
            if last > v:
                if k < 0:
                    continue
                span = last - v - 1
                if span > k:
                    m = (placed >> (v + 1)) & ((1 << span) - 1)
                    if bin((m ^ (m >> 1)) & ((1 << (span - 1)) - 1)).count("1") + 1 > k:
                        continue
            word[i] = v
            yield from rec(i + 1, placed | bit, v)

    yield from rec(0, 0, 0)


def brute_count_k_clumped(n: int, k: int) -> int:
    if n > BRUTE_GUARD:
        raise SizeGuardExceeded("brute_count_k_clumped", n, BRUTE_GUARD)
    return sum(1 for _ in k_clumped_permutations(n, k))


def filter_count_k_clumped(n: int, k: int) -> int:
    """Unpruned filter over all of S_n (slow; small-n oracle for the pruned search)."""
    return sum(1 for p in itertools.permutations(range(1, n + 1)) if is_k_clumped(p, k))


def encoding_histogram(n: int) -> Counter:
    """Multiplicity of each word among the encodings of G_n, by brute force."""
    return Counter(encode_2clumped(p) for p in k_clumped_permutations(n, 2))


def write_counts_csv(rows: Iterable[tuple[int, int]]) -> str:
    lines = ["n,count"] + [f"{n},{count}" for n, count in rows]
    return "\n".join(lines) + "\n"


# Known counts of generic rectangulations with n rectangles.
GENERIC_COUNTS = {
    1: 1, 2: 2, 3: 6, 4: 24, 5: 116, 6: 642, 7: 3938, 8: 26194, 9: 186042,
    10: 1395008, 11: 10948768, 12: 89346128, 13: 754062288, 14: 6553942722,
    15: 58457558394, 16: 533530004810, 17: 4970471875914, 18: 47169234466788,
    19: 455170730152340, 20: 4459456443328824, 21: 44300299824885392,
    22: 445703524836260400, 23: 4536891586511660256, 24: 46682404846719083048,
    25: 485158560873624409904, 26: 5089092437784870584576,
    27: 53845049871942333501408,
}
