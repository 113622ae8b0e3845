import random

import pytest

from rectperm.congruence import GAMMA, congruence_class
from rectperm.diagrect import rho
from rectperm.errors import IllegalSlide, InvalidGenRect
from rectperm.genrect import (
    GenRect,
    all_genrects,
    any_compatible_permutation,
    fiber_gamma,
    from_diag,
    gamma,
    interleavings,
    inverse_gamma,
    is_interleaving,
    is_mosaic_equivalent,
    shuffle_alphabets,
    wall_slide,
)
from rectperm.perm import Permutation, all_permutations, is_k_clumped, statistics

# (left side bottom-to-top, right side bottom-to-top, shuffle)
VERTICAL = {
    ((2,), (3,), ()),
    ((5,), (6,), ()),
    ((8, 7, 6), (13, 11, 9), (13, 7, 11, 6)),
    ((9,), (10,), ()),
    ((3, 1), (4,), (1,)),
    ((11, 10, 4), (12,), (10, 4)),
    ((13,), (14,), ()),
    ((14,), (15,), ()),
}
# (above left-to-right, below left-to-right, shuffle)
HORIZONTAL = {
    ((1,), (2, 3), (3,)),
    ((2, 3, 4), (5, 6, 9, 10), (2, 6, 9, 10, 3)),
    ((5, 6), (7,), (5,)),
    ((9, 10), (11,), (9,)),
    ((7,), (8,), ()),
    ((11, 12), (13, 14, 15), (11, 14, 15)),
}


def shuffle_rows(g):
    v, h = set(), set()
    for w, s in zip(g.walls, g.shuffles):
        if w.orientation == "v":
            v.add((w.side_a, w.side_b, s))
        else:
            h.add((w.side_b, w.side_a, s))
    return v, h


def test_example_wall_shuffles(example_perm):
    v, h = shuffle_rows(gamma(example_perm))
    assert v == VERTICAL
    assert h == HORIZONTAL


def test_example_counts(example_perm):
    g = gamma(example_perm)
    assert g.vertical_wall_count() == 8
    assert g.horizontal_wall_count() == 6
    g.validate()


def test_alphabets_of_example_walls(example_perm):
    walls = {(w.side_a, w.side_b): w for w in gamma(example_perm).walls}
    assert shuffle_alphabets(walls[(8, 7, 6), (13, 11, 9)]) == ((7, 6), (13, 11))
    assert shuffle_alphabets(walls[(5, 6, 9, 10), (2, 3, 4)]) == ((2, 3), (6, 9, 10))


def test_interleavings():
    got = list(interleavings((7, 6), (13, 11)))
    assert len(got) == 6 and len(set(got)) == 6
    assert all(is_interleaving(s, (7, 6), (13, 11)) for s in got)
    assert (13, 7, 11, 6) in got
    assert not is_interleaving((6, 7, 13, 11), (7, 6), (13, 11))
    assert list(interleavings((), ())) == [()]


def _example_wall_index(g):
    return next(i for i, w in enumerate(g.walls) if w.side_a == (8, 7, 6))


def test_wall_slide(example_perm):
    g = gamma(example_perm)
    i = _example_wall_index(g)
    slid = wall_slide(g, i, 0)
    assert slid.shuffles[i] == (7, 13, 11, 6)
    assert is_mosaic_equivalent(g, slid) and slid != g
    slid.validate()
    assert wall_slide(slid, i, 0) == g
    # 7 and 6 both come from the left side, so they cannot be exchanged
    same_side = GenRect(g.diag, tuple((13, 7, 6, 11) if j == i else s for j, s in enumerate(g.shuffles)))
    with pytest.raises(IllegalSlide):
        wall_slide(same_side, i, 1)
    assert wall_slide(g, i, 2).shuffles[i] == (13, 7, 6, 11)
    with pytest.raises(IllegalSlide):
        wall_slide(g, i, 3)


def test_validate_rejects_bad_shuffle(example_perm):
    g = gamma(example_perm)
    i = _example_wall_index(g)
    bad = GenRect(g.diag, tuple((6, 7, 13, 11) if j == i else s for j, s in enumerate(g.shuffles)))
    with pytest.raises(InvalidGenRect) as err:
        bad.validate()
    assert err.value.invariant == "shuffle-interleaving"
    with pytest.raises(InvalidGenRect) as err:
        GenRect(g.diag, g.shuffles[:-1]).validate()
    assert err.value.invariant == "one-shuffle-per-wall"
    with pytest.raises(InvalidGenRect):
        from_diag(g.diag, bad.shuffles)


def test_example_inverse(example_perm):
    g = gamma(example_perm)
    x = inverse_gamma(g)
    assert is_k_clumped(x, 2)
    assert gamma(x) == g
    assert x == Permutation.parse("8,13,7,5,2,11,6,9,10,3,1,4,14,15,12")


def test_small_examples():
    assert len(gamma(Permutation.parse("123")).walls) == 2
    # 35124 and 31524 differ by a gamma-contracted cover
    assert gamma(Permutation.parse("35124")) == gamma(Permutation.parse("31524"))


@pytest.mark.parametrize("n", range(1, 7))
def test_gamma_surjective_onto_all_genrects(n, gamma_fibers):
    fibers = gamma_fibers(n)
    diags = {g.diag for g in fibers}
    every = {g for d in diags for g in all_genrects(d)}
    assert every == set(fibers)


@pytest.mark.parametrize("n", range(1, 8))
def test_inverse_is_unique_clumped_member(n, gamma_fibers):
    for g, members in gamma_fibers(n).items():
        clumped = [p for p in members if is_k_clumped(p, 2)]
        assert clumped == [inverse_gamma(g)]
        assert gamma(any_compatible_permutation(g)) == g


@pytest.mark.parametrize("n", range(1, 7))
def test_fiber_is_congruence_class(n, gamma_fibers):
    for g, members in gamma_fibers(n).items():
        assert fiber_gamma(g) == set(members)
        assert congruence_class(members[0], GAMMA).members == frozenset(members)


@pytest.mark.parametrize("n", range(1, 8))
def test_wall_counts_follow_left_statistics(n):
    for x in all_permutations(n):
        g = gamma(x)
        s = statistics(x)
        assert g.vertical_wall_count() == s.left_ascents
        assert g.horizontal_wall_count() == s.left_descents
        assert len(g.walls) == n - 1


def test_right_ascent_reading_fails():
    x = Permutation.parse("2413")
    g = gamma(x)
    s = statistics(x)
    assert s.right_ascents == 2
    assert rho(x).walls == g.walls
    assert g.vertical_wall_count() == s.left_ascents == 1


def test_greedy_preimage_on_reachable_shuffles():
    rng = random.Random(7)
    for _ in range(200):
        x = Permutation(rng.sample(range(1, 10), 9))
        g = gamma(x)
        y = any_compatible_permutation(g)
        assert gamma(y) == g
        assert gamma(inverse_gamma(g)) == g
