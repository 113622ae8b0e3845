"""Exhaustive property suites over S_n, shared by the CLI and the tests."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from rectperm.congruence import GAMMA, congruence_class, gamma_cover_equivalent, rho_cover_equivalent
from rectperm.diagrect import is_generic_tiling, rho
from rectperm.enumeration import GENERIC_COUNTS
from rectperm.genrect import fiber_gamma, gamma, inverse_gamma
from rectperm.perm import all_permutations, covers_down, is_k_clumped, statistics
from rectperm.realize import extract, realize

GUARDS = {"bijection": 8, "congruence": 7, "statistics": 8, "roundtrip": 7}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    suite: str
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def as_dict(self) -> dict:
        return {"suite": self.suite, "n": self.n, "pass": self.passed, "checks": [asdict(c) for c in self.checks]}


def gamma_fibers(n: int) -> dict:
    fibers: dict = {}
    for p in all_permutations(n):
        fibers.setdefault(gamma(p), []).append(p)
    return fibers


def bijection(n: int) -> Report:
    rep = Report("bijection", n)
    fibers = gamma_fibers(n)
    if n in GENERIC_COUNTS:
        rep.add("image-size", len(fibers) == GENERIC_COUNTS[n], f"{len(fibers)} images, expected {GENERIC_COUNTS[n]}")
    bad_fibers = 0
    bad_inverse = 0
    for g, members in fibers.items():
        clumped = [p for p in members if is_k_clumped(p, 2)]
        if len(clumped) != 1:
            bad_fibers += 1
            continue
        if inverse_gamma(g) != clumped[0]:
            bad_inverse += 1
    rep.add("one-2-clumped-per-fiber", bad_fibers == 0, f"{bad_fibers} bad fibers")
    rep.add("inverse-gamma", bad_inverse == 0, f"{bad_inverse} mismatches")
    return rep


def congruence(n: int) -> Report:
    rep = Report("congruence", n)
    g_bad = r_bad = 0
    covers = 0
    images = {}
    for y in all_permutations(n):
        gy = images.setdefault(y, gamma(y))
        for x, move in covers_down(y):
            gx = images.setdefault(x, gamma(x))
            covers += 1
            g_bad += (gx == gy) != gamma_cover_equivalent(y, move)
            r_bad += (rho(x) == rho(y)) != rho_cover_equivalent(y, move)
    rep.add("gamma-cover", g_bad == 0, f"{g_bad} of {covers} covers disagree")
    rep.add("rho-cover", r_bad == 0, f"{r_bad} of {covers} covers disagree")
    seen: set = set()
    bad = 0
    classes = 0
    for x in all_permutations(n):
        if x in seen:
            continue
        cls = congruence_class(x, GAMMA)
        seen |= cls.members
        classes += 1
        bad += fiber_gamma(images[x]) != set(cls.members)
    rep.add("fiber-is-class", bad == 0, f"{bad} of {classes} classes differ from their fiber")
    if n in GENERIC_COUNTS:
        rep.add("class-count", classes == GENERIC_COUNTS[n], f"{classes} classes")
    return rep


def statistics_suite(n: int) -> Report:
    rep = Report("statistics", n)
    bad_v = bad_h = 0
    for x in all_permutations(n):
        g = gamma(x)
        st = statistics(x)
        bad_v += st.left_ascents != g.vertical_wall_count()
        bad_h += st.left_descents != g.horizontal_wall_count()
    rep.add("left-ascents=vertical-walls", bad_v == 0, f"{bad_v} mismatches")
    rep.add("left-descents=horizontal-walls", bad_h == 0, f"{bad_h} mismatches")
    return rep


def roundtrip(n: int) -> Report:
    rep = Report("roundtrip", n)
    bad_generic = bad_trip = 0
    images = set(gamma(p) for p in all_permutations(n))
    for g in images:
        layout = realize(g)
        bad_generic += not is_generic_tiling(layout.rects)
        bad_trip += extract(layout) != g
    rep.add("generic-tiling", bad_generic == 0, f"{bad_generic} of {len(images)} layouts")
    rep.add("extract-realize", bad_trip == 0, f"{bad_trip} of {len(images)} round trips")
    return rep


SUITES = {
    "bijection": bijection,
    "congruence": congruence,
    "statistics": statistics_suite,
    "roundtrip": roundtrip,
}
